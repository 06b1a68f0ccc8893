"""Named small graphs used across the test suite."""

from __future__ import annotations

from snarkppm import CubicGraph, Multigraph


def k4() -> Multigraph:
    return Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k5() -> Multigraph:
    return Multigraph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])


def k33() -> Multigraph:
    return Multigraph(6, [(i, j + 3) for i in range(3) for j in range(3)])


def prism() -> Multigraph:
    return Multigraph(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    )


def cube() -> Multigraph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
    edges += [(0, 4), (1, 5), (2, 6), (3, 7)]
    return Multigraph(8, edges)


def generalized_petersen(n: int, k: int) -> Multigraph:
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))  # outer cycle
        edges.append((i, n + i))  # spokes
        edges.append((n + i, n + (i + k) % n))  # inner star
    # The inner star lists every edge once per i; dedupe the pair direction.
    seen = set()
    out = []
    for a, b in edges:
        key = (min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        out.append(key)
    return Multigraph(2 * n, out)


def petersen_standard() -> Multigraph:
    return generalized_petersen(5, 2)


def pentagonal_prism() -> Multigraph:
    return generalized_petersen(5, 1)


def moebius_ladder(n: int) -> Multigraph:
    """Cycle on 2n vertices plus the n long chords."""
    edges = [(i, (i + 1) % (2 * n)) for i in range(2 * n)]
    edges += [(i, i + n) for i in range(n)]
    return Multigraph(2 * n, edges)


def durer() -> Multigraph:
    return generalized_petersen(6, 2)


def truncated_tetrahedron() -> Multigraph:
    # Vertex (v, u) sits on tetrahedron corner v toward corner u.
    ids = {}
    for v in range(4):
        for u in range(4):
            if u != v:
                ids[(v, u)] = len(ids)
    edges = []
    for v in range(4):
        corner = [u for u in range(4) if u != v]
        for i in range(3):
            edges.append((ids[(v, corner[i])], ids[(v, corner[(i + 1) % 3])]))
    for v in range(4):
        for u in range(v + 1, 4):
            edges.append((ids[(v, u)], ids[(u, v)]))
    return Multigraph(12, edges)


def star_triangle(g: Multigraph, v: int) -> Multigraph:
    """Replace a degree-3 vertex by a triangle (inverse of contraction)."""
    inc = g.incident_edges(v)
    assert len(inc) == 3
    n = g.n
    new_of = {e: n + i for i, e in enumerate(sorted(inc))}
    edges = []
    for e, (a, b) in enumerate(g.edges):
        if v not in (a, b):
            edges.append((a, b))
        else:
            other = b if a == v else a
            edges.append((other, new_of[e]))
    tri = sorted(new_of.values())
    edges += [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])]
    # Vertex v is now isolated; relabel it away.
    remap = [0] * (n + 3)
    nxt = 0
    for w in range(n + 3):
        if w == v:
            remap[w] = -1
            continue
        remap[w] = nxt
        nxt += 1
    return Multigraph(n + 2, [(remap[a], remap[b]) for a, b in edges])


def tietze() -> Multigraph:
    """Star-triangle expansion of one Petersen vertex; not 3-edge-colorable."""
    return star_triangle(petersen_standard(), 0)


def frucht() -> Multigraph:
    return lcf([-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2])


def lcf(shifts: list[int]) -> Multigraph:
    n = len(shifts)
    edges = [(i, (i + 1) % n) for i in range(n)]
    seen = {(min(a, b), max(a, b)) for a, b in edges}
    for i, d in enumerate(shifts):
        a, b = i, (i + d) % n
        key = (min(a, b), max(a, b))
        if key not in seen:
            seen.add(key)
            edges.append(key)
    return Multigraph(n, edges)


def cubic(g: Multigraph) -> CubicGraph:
    return CubicGraph(g)


EQUIVALENCE_CORPUS = {
    "K4": k4,
    "K33": k33,
    "prism": prism,
    "cube": cube,
    "petersen": petersen_standard,
    "pentagonal_prism": pentagonal_prism,
    "moebius_V10": lambda: moebius_ladder(5),
    "tietze": tietze,
    "frucht": frucht,
    "durer": durer,
    "truncated_tetrahedron": truncated_tetrahedron,
}
