"""Canonical labeling and isomorphism testing for small multigraphs.

Refinement plus backtracking: vertices are first partitioned by an
iterated neighbourhood-signature refinement, then a branch-and-bound search
picks the labeling that maximizes the adjacency-column sequence
(color, multiplicities to already-labeled vertices, loop count). Two graphs
get the same canonical edge list iff they are isomorphic; the tie-break
order among canonical labelings is an internal detail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import Multigraph


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    canonical_edge_list: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        return f"{self.n}:" + ",".join(f"{a}-{b}" for a, b in self.canonical_edge_list)


def refinement_colors(g: Multigraph) -> list[int]:
    """Stable 1-WL-style coloring; color ids are isomorphism-invariant."""
    mult = _multiplicities(g)
    loops = _loop_counts(g)
    colors = _rank([(g.degree(v), loops[v]) for v in range(g.n)])
    while True:
        sigs = []
        for v in range(g.n):
            nb = sorted((colors[u], k) for u, k in mult[v].items())
            sigs.append((colors[v], tuple(nb)))
        new = _rank(sigs)
        if new == colors:
            return colors
        colors = new


def canonical_form(g: Multigraph) -> CanonicalForm:
    labeling = canonical_labeling(g)
    pos = [0] * g.n
    for lab, v in enumerate(labeling):
        pos[v] = lab
    edges = sorted(
        tuple(sorted((pos[a], pos[b]))) for a, b in g.edges
    )
    return CanonicalForm(g.n, tuple(edges))


def canonical_labeling(g: Multigraph) -> list[int]:
    """Vertex order (original id per new label) chosen by the canonical search."""
    n = g.n
    if n == 0:
        return []
    colors = refinement_colors(g)
    mult = _multiplicities(g)
    loops = _loop_counts(g)

    best_seq: list[tuple] = []
    best_lab: list[int] = []

    # Depth-first over labelings; at each depth keep only the candidates
    # whose column is maximal, compare the growing sequence against the best.
    def extend(labeling: list[int], seq: list[tuple], used: set[int]) -> None:
        nonlocal best_seq, best_lab
        depth = len(labeling)
        if depth == n:
            if not best_seq or seq > best_seq:
                best_seq = list(seq)
                best_lab = list(labeling)
            return
        cols: dict[int, tuple] = {}
        for v in range(n):
            if v in used:
                continue
            row = tuple(mult[v].get(u, 0) for u in labeling)
            cols[v] = (colors[v], row, loops[v])
        top = max(cols.values())
        # Bound: compare against the best sequence at this depth.
        if best_seq:
            prefix_cmp = _cmp_prefix(seq + [top], best_seq)
            if prefix_cmp < 0:
                return
        for v, col in cols.items():
            if col != top:
                continue
            labeling.append(v)
            seq.append(col)
            used.add(v)
            extend(labeling, seq, used)
            used.discard(v)
            seq.pop()
            labeling.pop()

    extend([], [], set())
    return best_lab


def are_isomorphic(a: Multigraph, b: Multigraph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    if sorted(refinement_colors(a)) != sorted(refinement_colors(b)):
        return False
    return canonical_form(a) == canonical_form(b)


def _cmp_prefix(partial: list[tuple], best: list[tuple]) -> int:
    """-1 if partial is strictly below best on the shared prefix, else >= 0."""
    for x, y in zip(partial, best):
        if x > y:
            return 1
        if x < y:
            return -1
    return 0


def _multiplicities(g: Multigraph) -> list[dict[int, int]]:
    mult: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for a, b in g.edges:
        if a == b:
            continue
        mult[a][b] = mult[a].get(b, 0) + 1
        mult[b][a] = mult[b].get(a, 0) + 1
    return mult


def _loop_counts(g: Multigraph) -> list[int]:
    loops = [0] * g.n
    for a, b in g.edges:
        if a == b:
            loops[a] += 1
    return loops


def _rank(keys: list) -> list[int]:
    order = sorted(set(keys))
    index = {k: i for i, k in enumerate(order)}
    return [index[k] for k in keys]
