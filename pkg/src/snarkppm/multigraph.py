"""Core multigraph and cubic graph types.

Graphs are immutable after construction: vertex count plus an ordered edge
list. Loops and parallel edges are allowed; edge indices are stable and all
operations that modify a graph return a fresh one.
"""

from __future__ import annotations

from typing import Iterable, Sequence

VERTEX_CAP = 128


class GraphError(ValueError):
    """Structural problem with a graph or graph argument."""


class Multigraph:
    """Undirected multigraph: ``n`` vertices, ordered list of endpoint pairs.

    Edge ``i`` is ``edges[i] = (a, b)``; loops are ``(a, a)``. Vertices are
    ``0..n-1``.
    """

    __slots__ = ("n", "edges", "_incident", "_adj_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if n > VERTEX_CAP:
            raise GraphError(f"vertex count {n} exceeds cap {VERTEX_CAP}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (int(a), int(b)) for a, b in edges
        )
        for i, (a, b) in enumerate(self.edges):
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge {i} = ({a},{b}) has endpoint outside 0..{n - 1}")
        incident: list[list[int]] = [[] for _ in range(n)]
        for i, (a, b) in enumerate(self.edges):
            incident[a].append(i)
            if b != a:
                incident[b].append(i)
        self._incident: tuple[tuple[int, ...], ...] = tuple(tuple(x) for x in incident)
        mask = [0] * n
        for a, b in self.edges:
            if a != b:
                mask[a] |= 1 << b
                mask[b] |= 1 << a
        self._adj_mask: tuple[int, ...] = tuple(mask)

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Loops count twice."""
        d = 0
        for i in self._incident[v]:
            a, b = self.edges[i]
            d += 2 if a == b else 1
        return d

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Edge indices touching v (a loop appears once)."""
        return self._incident[v]

    def adjacency_mask(self, v: int) -> int:
        """Bitmask of neighbours of v, ignoring loops and multiplicity."""
        return self._adj_mask[v]

    def neighbors(self, v: int) -> list[int]:
        out = []
        mask = self._adj_mask[v]
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} not an endpoint of edge {edge}")

    def edge_between(self, a: int, b: int) -> int | None:
        """Index of some edge joining a and b, or None."""
        for i in self._incident[a]:
            x, y = self.edges[i]
            if (x, y) == (a, b) or (x, y) == (b, a):
                return i
        return None

    def has_edge(self, a: int, b: int) -> bool:
        return self.edge_between(a, b) is not None

    # -- structure predicates ----------------------------------------------

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            if a == b:
                return False
            key = (a, b) if a < b else (b, a)
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for i in self._incident[v]:
                w = self.other_end(i, v)
                bit = 1 << w
                if not seen & bit:
                    seen |= bit
                    frontier.append(w)
        return seen == (1 << self.n) - 1

    def connected_components(self) -> list[list[int]]:
        comp = [-1] * self.n
        comps: list[list[int]] = []
        for s in range(self.n):
            if comp[s] >= 0:
                continue
            cid = len(comps)
            comp[s] = cid
            group = [s]
            frontier = [s]
            while frontier:
                v = frontier.pop()
                for i in self._incident[v]:
                    w = self.other_end(i, v)
                    if comp[w] < 0:
                        comp[w] = cid
                        group.append(w)
                        frontier.append(w)
            comps.append(sorted(group))
        return comps

    # -- derived graphs ------------------------------------------------------

    def without_edges(self, drop: Iterable[int]) -> "Multigraph":
        """Fresh graph with the given edge indices removed (others keep order)."""
        dropset = set(drop)
        return Multigraph(
            self.n, [e for i, e in enumerate(self.edges) if i not in dropset]
        )

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Multigraph":
        return Multigraph(self.n, list(self.edges) + list(extra))

    def relabeled(self, perm: Sequence[int]) -> "Multigraph":
        """Apply vertex permutation: new label of v is perm[v]."""
        return Multigraph(self.n, [(perm[a], perm[b]) for a, b in self.edges])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


class CubicGraph:
    """A 3-regular multigraph, optionally certified simple."""

    __slots__ = ("graph", "simple")

    def __init__(self, graph: Multigraph, require_simple: bool = False):
        for v in range(graph.n):
            d = graph.degree(v)
            if d != 3:
                raise GraphError(f"vertex {v} has degree {d}, expected 3")
        self.graph = graph
        self.simple = graph.is_simple()
        if require_simple and not self.simple:
            raise GraphError("graph has loops or parallel edges")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, simple={self.simple})"


def cubic(n: int, edges: Iterable[tuple[int, int]]) -> CubicGraph:
    return CubicGraph(Multigraph(n, edges))


# -- plain-text edge-list format -------------------------------------------
#
# First line "n m", then m lines "a b" (0-based ids, loops as "a a"). This is
# the interchange format for multigraphs; graph6 covers the simple case.


def parse_edge_list(text: str) -> Multigraph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"bad header line {lines[0]!r}, expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Multigraph(n, edges)


def write_edge_list(g: Multigraph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(out) + "\n"
