"""Perfect pseudo-matchings: validation, enumeration, contraction.

A perfect pseudo-matching (PPM) is a spanning collection of vertex-disjoint
K2 and K1,3 subgraphs of a cubic graph. Contracting one yields an eulerian
multigraph with degrees 4 and 6 plus the transition system induced by the
complement cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .minors import has_k5_minor, is_planar
from .multigraph import CubicGraph, GraphError, Multigraph


@dataclass(frozen=True)
class K2Component:
    edge: int


@dataclass(frozen=True)
class ClawComponent:
    center: int
    leaf_edges: tuple[int, int, int]


Component = K2Component | ClawComponent


@dataclass(frozen=True)
class PseudoMatching:
    components: tuple[Component, ...]

    def edge_set(self, g: Multigraph) -> set[int]:
        out: set[int] = set()
        for comp in self.components:
            if isinstance(comp, K2Component):
                out.add(comp.edge)
            else:
                out.update(comp.leaf_edges)
        return out

    def component_vertices(self, g: Multigraph) -> list[tuple[int, ...]]:
        out = []
        for comp in self.components:
            if isinstance(comp, K2Component):
                out.append(tuple(g.edges[comp.edge]))
            else:
                verts = [comp.center]
                for e in comp.leaf_edges:
                    verts.append(g.other_end(e, comp.center))
                out.append(tuple(verts))
        return out

    def is_perfect_matching(self) -> bool:
        return all(isinstance(c, K2Component) for c in self.components)

    def claw_count(self) -> int:
        return sum(1 for c in self.components if isinstance(c, ClawComponent))


@dataclass(frozen=True)
class Violation:
    message: str


def validate_ppm(g: CubicGraph, m: PseudoMatching) -> Violation | None:
    """None when m is a valid PPM of g, else the first violation found."""
    mg = g.graph
    covered: dict[int, int] = {}
    for ci, comp in enumerate(m.components):
        if isinstance(comp, K2Component):
            if not 0 <= comp.edge < mg.m:
                raise GraphError(f"component {ci}: edge index {comp.edge} out of range")
            a, b = mg.edges[comp.edge]
            if a == b:
                return Violation(f"component {ci}: edge {comp.edge} is a loop")
            verts = (a, b)
        else:
            if len(set(comp.leaf_edges)) != 3:
                return Violation(f"component {ci}: claw edges not distinct")
            verts_list = [comp.center]
            for e in comp.leaf_edges:
                if not 0 <= e < mg.m:
                    raise GraphError(f"component {ci}: edge index {e} out of range")
                x, y = mg.edges[e]
                if comp.center not in (x, y):
                    return Violation(
                        f"component {ci}: edge {e} not incident to center {comp.center}"
                    )
                leaf = mg.other_end(e, comp.center)
                if leaf == comp.center:
                    return Violation(f"component {ci}: edge {e} is a loop")
                verts_list.append(leaf)
            if len(set(verts_list)) != 4:
                return Violation(f"component {ci}: claw vertices not distinct")
            verts = tuple(verts_list)
        for v in verts:
            if v in covered:
                return Violation(f"vertex {v} in two components")
            covered[v] = ci
    for v in range(mg.n):
        if v not in covered:
            return Violation(f"uncovered vertex {v}")
    return None


def enumerate_ppms(
    g: CubicGraph, perfect_matchings_only: bool = False
) -> Iterator[PseudoMatching]:
    """All PPMs of g, each exactly once, in a deterministic order.

    Branches on the lowest uncovered vertex: cover it by each incident K2,
    by the claw centered there, or by a claw centered at a neighbour.
    """
    mg = g.graph
    n = mg.n
    if n == 0:
        yield PseudoMatching(())
        return
    covered = [False] * n
    parts: list[Component] = []

    def claw_at(center: int) -> ClawComponent | None:
        inc = sorted(mg.incident_edges(center))
        leaves = []
        for e in inc:
            leaf = mg.other_end(e, center)
            if leaf == center or covered[leaf]:
                return None
            leaves.append(leaf)
        if len(set(leaves)) != 3 or len(inc) != 3:
            return None
        return ClawComponent(center, tuple(inc))

    def rec(start: int) -> Iterator[PseudoMatching]:
        v = start
        while v < n and covered[v]:
            v += 1
        if v == n:
            yield PseudoMatching(tuple(parts))
            return
        # K2 on each incident edge.
        for e in sorted(mg.incident_edges(v)):
            w = mg.other_end(e, v)
            if w == v or covered[w]:
                continue
            covered[v] = covered[w] = True
            parts.append(K2Component(e))
            yield from rec(v + 1)
            parts.pop()
            covered[v] = covered[w] = False
        if perfect_matchings_only:
            return
        # Claw centered at v.
        claw = claw_at(v)
        if claw is not None:
            touched = [v] + [mg.other_end(e, v) for e in claw.leaf_edges]
            for x in touched:
                covered[x] = True
            parts.append(claw)
            yield from rec(v + 1)
            parts.pop()
            for x in touched:
                covered[x] = False
        # Claw centered at an uncovered neighbour of v (v is a leaf).
        for u in sorted(mg.neighbors(v)):
            if covered[u] or u == v:
                continue
            claw = claw_at(u)
            if claw is None:
                continue
            touched = [u] + [mg.other_end(e, u) for e in claw.leaf_edges]
            if v not in touched:
                continue
            for x in touched:
                covered[x] = True
            parts.append(claw)
            yield from rec(v + 1)
            parts.pop()
            for x in touched:
                covered[x] = False

    yield from rec(0)


def complement_cycles(g: CubicGraph, m: PseudoMatching) -> list[list[int]]:
    """The disjoint cycles of g minus the PPM edges, as closed vertex lists.

    Each cycle starts at its least vertex and steps first toward the
    lower-indexed available edge, so output is deterministic.
    """
    bad = validate_ppm(g, m)
    if bad is not None:
        raise GraphError(f"invalid PPM: {bad.message}")
    mg = g.graph
    in_m = m.edge_set(mg)
    next_edges: list[list[int]] = [[] for _ in range(mg.n)]
    for e in range(mg.m):
        if e in in_m:
            continue
        a, b = mg.edges[e]
        next_edges[a].append(e)
        next_edges[b].append(e)
    for v in range(mg.n):
        if len(next_edges[v]) not in (0, 2):  # claw centers have degree 0
            raise GraphError(
                f"complement degree at vertex {v} is {len(next_edges[v])}"
            )
    seen = [False] * mg.n
    cycles = []
    for s in range(mg.n):
        if seen[s] or not next_edges[s]:
            continue
        cycle = [s]
        seen[s] = True
        e = min(next_edges[s])
        v = mg.other_end(e, s)
        while v != s:
            cycle.append(v)
            seen[v] = True
            e = next_edges[v][0] if next_edges[v][1] == e else next_edges[v][1]
            v = mg.other_end(e, v)
        cycles.append(cycle)
    return cycles


@dataclass(frozen=True)
class TransitionSystem:
    """Per contracted vertex, disjoint pairs of incident edge indices."""

    pairs_at: tuple[tuple[frozenset[int], ...], ...]

    def pairs(self, v: int) -> tuple[frozenset[int], ...]:
        return self.pairs_at[v]

    def all_pairs(self) -> list[frozenset[int]]:
        return [p for at in self.pairs_at for p in at]


@dataclass(frozen=True)
class ContractedGraph:
    graph: Multigraph
    transitions: TransitionSystem
    component_of: tuple[int, ...]  # original vertex -> quotient vertex
    edge_origin: tuple[int, ...]  # quotient edge -> original edge


def contract(g: CubicGraph, m: PseudoMatching) -> ContractedGraph:
    """Quotient g by the PPM components, with the induced transition system."""
    bad = validate_ppm(g, m)
    if bad is not None:
        raise GraphError(f"invalid PPM: {bad.message}")
    mg = g.graph
    if not mg.is_connected():
        raise GraphError("contraction requires a connected graph")

    comp_verts = m.component_vertices(mg)
    order = sorted(range(len(comp_verts)), key=lambda i: min(comp_verts[i]))
    component_of = [-1] * mg.n
    for q, ci in enumerate(order):
        for v in comp_verts[ci]:
            component_of[v] = q

    in_m = m.edge_set(mg)
    q_edges = []
    edge_origin = []
    q_index_of_original: dict[int, int] = {}
    for e, (a, b) in enumerate(mg.edges):
        if e in in_m:
            continue
        qa, qb = component_of[a], component_of[b]
        # qa == qb gives a quotient loop; it happens whenever a complement
        # edge joins two vertices of one component (e.g. two claw leaves).
        q_index_of_original[e] = len(q_edges)
        q_edges.append((qa, qb))
        edge_origin.append(e)
    quotient = Multigraph(len(comp_verts), q_edges)

    # Transitions: quotient edge pairs consecutive on a complement cycle
    # through the component, i.e. the two non-PPM edges at each original
    # vertex that still has two of them.
    pairs: list[list[frozenset[int]]] = [[] for _ in range(quotient.n)]
    for v in range(mg.n):
        non_m = [e for e in mg.incident_edges(v) if e not in in_m]
        if len(non_m) == 2:
            q = component_of[v]
            pairs[q].append(
                frozenset({q_index_of_original[non_m[0]], q_index_of_original[non_m[1]]})
            )
    for q in range(quotient.n):
        deg = quotient.degree(q)
        if deg not in (4, 6):
            raise GraphError(f"quotient vertex {q} has degree {deg}")
        if len(pairs[q]) != deg // 2:
            raise GraphError(f"quotient vertex {q} has {len(pairs[q])} transitions")
    return ContractedGraph(
        quotient,
        TransitionSystem(tuple(tuple(p) for p in pairs)),
        tuple(component_of),
        tuple(edge_origin),
    )


PLANARIZING = "planarizing"
K5_MINOR_FREE_ONLY = "k5_minor_free_only"
NEITHER = "neither"


def classify_ppm(g: CubicGraph, m: PseudoMatching) -> str:
    """planarizing | k5_minor_free_only | neither, judged on the quotient."""
    cg = contract(g, m)
    if is_planar(cg.graph) is not None:
        return PLANARIZING
    if not has_k5_minor(cg.graph):
        return K5_MINOR_FREE_ONLY
    return NEITHER


def ppm_from_dominating_cycle(
    g: CubicGraph, cycle: list[int], cycle_edges: list[int] | None = None
) -> PseudoMatching:
    """The PPM formed by the edges of g not on the dominating cycle.

    ``cycle_edges`` resolves which parallel edge the cycle uses; without it
    the steps are looked up by endpoints (fine for simple graphs).
    """
    mg = g.graph
    if cycle_edges is not None:
        cyc_edges = set(cycle_edges)
        if len(cyc_edges) != len(cycle):
            raise GraphError("cycle repeats an edge")
    else:
        cyc_edges = _cycle_edge_set(mg, cycle)
    on_cycle = set(cycle)
    for e, (a, b) in enumerate(mg.edges):
        if a not in on_cycle and b not in on_cycle:
            raise GraphError(f"cycle is not dominating: edge {e} = ({a},{b}) outside")
    rest = [e for e in range(mg.m) if e not in cyc_edges]
    deg = {v: [] for v in range(mg.n)}
    for e in rest:
        a, b = mg.edges[e]
        deg[a].append(e)
        deg[b].append(e)
    parts: list[Component] = []
    used: set[int] = set()
    for v in range(mg.n):
        if len(deg[v]) == 3 and v not in used:
            parts.append(ClawComponent(v, tuple(sorted(deg[v]))))
            used.add(v)
            for e in deg[v]:
                used.add(mg.other_end(e, v))
    for e in rest:
        a, b = mg.edges[e]
        if a in used or b in used:
            continue
        parts.append(K2Component(e))
        used.add(a)
        used.add(b)
    ppm = PseudoMatching(tuple(parts))
    bad = validate_ppm(g, ppm)
    if bad is not None:
        raise GraphError(f"cycle complement is not a PPM: {bad.message}")
    return ppm


def _cycle_edge_set(g: Multigraph, cycle: list[int]) -> set[int]:
    if len(cycle) < 2:
        raise GraphError("cycle must have length >= 2")
    out = set()
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        e = g.edge_between(v, w)
        if e is None:
            raise GraphError(f"cycle step {v}->{w} is not an edge")
        out.add(e)
    if len(out) != len(cycle):
        raise GraphError("cycle repeats an edge")
    return out


# -- PPM sidecar text format -------------------------------------------------
#
# One line per component: "K2 a b" or "CLAW c x y z", with vertex ids of g.


def write_ppm(g: Multigraph, m: PseudoMatching) -> str:
    lines = []
    for comp in m.components:
        if isinstance(comp, K2Component):
            a, b = g.edges[comp.edge]
            lines.append(f"K2 {a} {b}")
        else:
            leaves = sorted(g.other_end(e, comp.center) for e in comp.leaf_edges)
            lines.append(f"CLAW {comp.center} {leaves[0]} {leaves[1]} {leaves[2]}")
    return "\n".join(lines) + "\n"


def parse_ppm(g: Multigraph, text: str) -> PseudoMatching:
    parts: list[Component] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "K2" and len(fields) == 3:
            a, b = int(fields[1]), int(fields[2])
            e = g.edge_between(a, b)
            if e is None:
                raise GraphError(f"ppm line {lineno}: no edge {a}-{b}")
            parts.append(K2Component(e))
        elif fields[0] == "CLAW" and len(fields) == 5:
            c = int(fields[1])
            leaf_edges = []
            for leaf in fields[2:]:
                e = g.edge_between(c, int(leaf))
                if e is None:
                    raise GraphError(f"ppm line {lineno}: no edge {c}-{leaf}")
                leaf_edges.append(e)
            parts.append(ClawComponent(c, tuple(sorted(leaf_edges))))
        else:
            raise GraphError(f"ppm line {lineno}: unrecognized component {line!r}")
    return PseudoMatching(tuple(parts))
