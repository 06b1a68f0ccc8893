"""Cyclic edge connectivity for cubic graphs by candidate-cut enumeration.

A cyclic edge cut is an edge set whose removal leaves at least two components
that each contain a cycle. Every minimal such cut of size c shows up as
(c-1 removed edges) + (a bridge of the remainder), which is what the
enumeration walks. Exhaustive at the vertex cap.

Convention for graphs with no two vertex-disjoint cycles (e.g. K4): there is
no cyclic cut of any size, so ``cyclic_edge_connectivity_at_least`` reports
True for every k.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .multigraph import CubicGraph, GraphError, Multigraph


def cyclic_edge_connectivity_at_least(g: CubicGraph, k: int) -> bool:
    """True iff no edge cut of size < k separates two cycle-containing parts."""
    if not 2 <= k <= 6:
        raise GraphError(f"k={k} outside supported range 2..6")
    if not g.graph.is_connected():
        raise GraphError("cyclic edge connectivity needs a connected graph")
    for _cut in cyclic_cuts_up_to(g.graph, k - 1):
        return False
    return True


def cyclic_cuts_up_to(g: Multigraph, max_size: int) -> Iterator[frozenset[int]]:
    """All cyclic edge cuts of size <= max_size, each reported once."""
    seen: set[frozenset[int]] = set()
    m = g.m
    for s in range(max_size):
        for subset in combinations(range(m), s):
            banned = set(subset)
            for b in _bridges(g, banned):
                cut = frozenset(banned | {b})
                if len(cut) > max_size or cut in seen:
                    continue
                if _is_cyclic_cut(g, cut):
                    seen.add(cut)
                    yield cut


def _bridges(g: Multigraph, banned: set[int]) -> list[int]:
    """Bridges of g minus the banned edges (iterative lowpoint DFS)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[int] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack: list[list] = [[root, -1, 0]]  # vertex, entry edge, edge-pos
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            frame = stack[-1]
            v, entry, pos = frame
            inc = g.incident_edges(v)
            advanced = False
            while pos < len(inc):
                e = inc[pos]
                pos += 1
                frame[2] = pos
                if e in banned or e == entry:
                    continue
                w = g.other_end(e, v)
                if w == v:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, e, 0])
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            if pos >= len(inc):
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        out.append(entry)
    return out


def _is_cyclic_cut(g: Multigraph, cut: frozenset[int]) -> bool:
    """Removal must leave >= 2 components that each contain a cycle."""
    n = g.n
    comp = [-1] * n
    ncomp = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        comp[s] = ncomp
        frontier = [s]
        while frontier:
            v = frontier.pop()
            for e in g.incident_edges(v):
                if e in cut:
                    continue
                w = g.other_end(e, v)
                if comp[w] == -1:
                    comp[w] = ncomp
                    frontier.append(w)
        ncomp += 1
    if ncomp < 2:
        return False
    vcount = [0] * ncomp
    ecount = [0] * ncomp
    for v in range(n):
        vcount[comp[v]] += 1
    for e, (a, _b) in enumerate(g.edges):
        if e not in cut:
            ecount[comp[a]] += 1
    cyclic_sides = sum(1 for c in range(ncomp) if ecount[c] >= vcount[c])
    return cyclic_sides >= 2
