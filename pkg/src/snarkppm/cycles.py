"""Cycle machinery: dominating and stable cycles, compatible cycle
decompositions, cycle double covers, intersection graphs, and the
dominating-cycle reduction loop.

Cycles are vertex-simple closed walks: length 1 (a loop edge), length 2
(a pair of parallel edges), or longer. Compatibility with a transition
system counts edges, except that a self-pair {e} (one loop named twice,
i.e. both its ends) forbids e on any cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .coloring import EdgeColoring, coloring_is_proper
from .eulerian import Association, associate
from .multigraph import CubicGraph, GraphError, Multigraph
from .ppm import (
    ContractedGraph,
    K2Component,
    PseudoMatching,
    TransitionSystem,
    Violation,
    complement_cycles,
    contract,
    ppm_from_dominating_cycle,
)


@dataclass(frozen=True)
class Cycle:
    """Closed walk: ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def check_cycle(g: Multigraph, c: Cycle) -> None:
    k = len(c.vertices)
    if k < 1 or len(c.edges) != k:
        raise GraphError(f"cycle has {k} vertices and {len(c.edges)} edges")
    if len(set(c.vertices)) != k:
        raise GraphError("cycle repeats a vertex")
    if len(set(c.edges)) != k:
        raise GraphError("cycle repeats an edge")
    if k == 1:
        a, b = g.edges[c.edges[0]]
        if a != b or a != c.vertices[0]:
            raise GraphError("length-1 cycle must be a loop at its vertex")
        return
    for i in range(k):
        a, b = c.vertices[i], c.vertices[(i + 1) % k]
        x, y = g.edges[c.edges[i]]
        if {a, b} != {x, y}:
            raise GraphError(f"cycle edge {c.edges[i]} does not join {a},{b}")


def cycle_from_vertices(g: Multigraph, vertices: list[int]) -> Cycle:
    edges = []
    for i, v in enumerate(vertices):
        w = vertices[(i + 1) % len(vertices)]
        e = g.edge_between(v, w)
        if e is None:
            raise GraphError(f"no edge {v}-{w}")
        edges.append(e)
    c = Cycle(tuple(vertices), tuple(edges))
    check_cycle(g, c)
    return c


DECOMPOSITION = "decomposition"
CCD = "ccd"
CDC = "cdc"


@dataclass(frozen=True)
class CycleSet:
    cycles: tuple[Cycle, ...]
    role: str  # decomposition | ccd | cdc


def verify_cycle_set(g: Multigraph, s: CycleSet) -> Violation | None:
    """Check the role's edge-multiplicity contract; report the first breach."""
    want = 2 if s.role == CDC else 1
    for c in s.cycles:
        try:
            check_cycle(g, c)
        except GraphError as exc:
            return Violation(str(exc))
    count = [0] * g.m
    for c in s.cycles:
        for e in c.edges:
            count[e] += 1
    names = {0: "zero times", 1: "once", 2: "twice", 3: "three times"}
    for e in range(g.m):
        if count[e] != want:
            got = names.get(count[e], f"{count[e]} times")
            return Violation(f"edge {e} covered {got}, expected {names[want]}")
    return None


def _pair_hits(pair: frozenset[int], edges: frozenset[int]) -> int:
    if len(pair) == 1:
        (e,) = pair
        return 2 if e in edges else 0  # self-paired loop: both ends count
    return len(pair & edges)


# ---------------------------------------------------------------------------
# Dominating and stable cycles
# ---------------------------------------------------------------------------


def is_dominating(g: CubicGraph, cycle_vertices: set[int]) -> bool:
    for a, b in g.graph.edges:
        if a not in cycle_vertices and b not in cycle_vertices:
            return False
    return True


def find_dominating_cycles(
    g: CubicGraph, limit: int | None = None
) -> Iterator[Cycle]:
    """All dominating cycles (exhaustive unless limit is set), deterministic.

    Cycles come out grouped by their least vertex, each one exactly once.
    """
    if not g.graph.is_connected():
        raise GraphError("dominating-cycle search needs a connected graph")
    found = 0
    for c in _all_cycles(g.graph):
        if is_dominating(g, set(c.vertices)):
            yield c
            found += 1
            if limit is not None and found >= limit:
                return


def _all_cycles(g: Multigraph) -> Iterator[Cycle]:
    """All cycles of length >= 2, least vertex first, each exactly once."""
    for s in range(g.n):
        yield from _cycles_from(g, s, set(), None)


def _cycles_from(
    g: Multigraph, s: int, required: set[int], below_ok: bool | None
) -> Iterator[Cycle]:
    """Cycles through s covering ``required``; vertices < s excluded unless
    below_ok (used by cycles_containing, where s = min(required))."""
    allow_below = below_ok if below_ok is not None else False
    path = [s]
    on_path = {s}
    edges_used: list[int] = []

    def reachable_ok() -> bool:
        missing = required - on_path
        if not missing:
            return True
        seen = {path[-1]}
        frontier = [path[-1]]
        blocked = on_path - {path[-1], s}
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if w in seen or w in blocked:
                    continue
                seen.add(w)
                frontier.append(w)
        return missing <= seen

    def extend() -> Iterator[Cycle]:
        v = path[-1]
        for e in sorted(g.incident_edges(v)):
            if edges_used and e == edges_used[-1]:
                continue
            w = g.other_end(e, v)
            if w == v:
                continue
            if w == s and len(path) >= 2:
                if e == edges_used[0]:
                    continue
                if len(path) == 2 and e < edges_used[0]:
                    continue  # digon reported once, by its lower first edge
                if len(path) > 2 and path[1] > path[-1]:
                    continue  # one traversal direction only
                if required <= on_path:
                    yield Cycle(tuple(path), tuple(edges_used + [e]))
                continue
            if w in on_path or (w < s and not allow_below):
                continue
            path.append(w)
            on_path.add(w)
            edges_used.append(e)
            if not required or reachable_ok():
                yield from extend()
            edges_used.pop()
            on_path.discard(w)
            path.pop()

    yield from extend()


def cycles_containing(g: Multigraph, required: set[int]) -> Iterator[Cycle]:
    """All cycles D (length >= 2) with required ⊆ V(D), each exactly once."""
    if not required:
        yield from _all_cycles(g)
        return
    yield from _cycles_from(g, min(required), set(required), True)


def is_stable(g: CubicGraph, c: Cycle) -> bool:
    """No distinct cycle D has V(C) ⊆ V(D)."""
    check_cycle(g.graph, c)
    target = c.edge_set()
    for d in cycles_containing(g.graph, set(c.vertices)):
        if d.edge_set() != target:
            return False
    return True


# ---------------------------------------------------------------------------
# Compatible cycle decompositions
# ---------------------------------------------------------------------------


def enumerate_ccds(cg: ContractedGraph) -> Iterator[CycleSet]:
    """Every transition-compatible cycle decomposition, each exactly once."""
    g = cg.graph
    forbidden: list[set[frozenset[int]]] = [
        set(cg.transitions.pairs(v)) for v in range(g.n)
    ]
    # A self-paired edge can never lie on a compatible cycle.
    for v in range(g.n):
        for pair in forbidden[v]:
            if len(pair) == 1:
                return
    chosen: list[Cycle] = []

    def loop_ok(e: int, v: int) -> bool:
        return all(_pair_hits(p, frozenset({e})) <= 1 for p in forbidden[v])

    def cycles_through(e0: int, unused: set[int]) -> Iterator[Cycle]:
        a, b = g.edges[e0]
        if a == b:
            if loop_ok(e0, a):
                yield Cycle((a,), (e0,))
            return
        # Digons through a parallel mate of e0.
        for f in sorted(g.incident_edges(b)):
            if f != e0 and f in unused and g.other_end(f, b) == a:
                pair = frozenset({e0, f})
                if pair not in forbidden[a] and pair not in forbidden[b]:
                    yield Cycle((a, b), (e0, f))
        path_v = [a, b]
        path_e = [e0]
        on_path = {a, b}

        def extend() -> Iterator[Cycle]:
            v = path_v[-1]
            last = path_e[-1]
            for f in sorted(g.incident_edges(v)):
                if f not in unused or f == last:
                    continue
                if frozenset({last, f}) in forbidden[v]:
                    continue
                w = g.other_end(f, v)
                if w == v:
                    continue
                if w == a:
                    if len(path_v) > 2 and frozenset({f, e0}) not in forbidden[a]:
                        yield Cycle(tuple(path_v), tuple(path_e + [f]))
                    continue
                if w in on_path:
                    continue
                path_v.append(w)
                path_e.append(f)
                on_path.add(w)
                yield from extend()
                on_path.discard(w)
                path_e.pop()
                path_v.pop()

        yield from extend()

    def rec(unused: set[int]) -> Iterator[CycleSet]:
        if not unused:
            yield CycleSet(tuple(chosen), CCD)
            return
        e0 = min(unused)
        for cyc in cycles_through(e0, unused):
            chosen.append(cyc)
            yield from rec(unused - cyc.edge_set())
            chosen.pop()

    yield from rec(set(range(g.m)))


def find_ccd(cg: ContractedGraph) -> CycleSet | None:
    return next(enumerate_ccds(cg), None)


def verify_ccd_compatible(cg: ContractedGraph, s: CycleSet) -> Violation | None:
    """Decomposition check plus |E(C) ∩ P| <= 1 for every transition pair."""
    bad = verify_cycle_set(cg.graph, s)
    if bad is not None:
        return bad
    for c in s.cycles:
        edges = c.edge_set()
        for v in range(cg.graph.n):
            for pair in cg.transitions.pairs(v):
                if _pair_hits(pair, edges) > 1:
                    return Violation(
                        f"cycle uses both edges of transition pair {sorted(pair)}"
                        f" at vertex {v}"
                    )
    return None


# ---------------------------------------------------------------------------
# Lifting a CCD to a cycle double cover
# ---------------------------------------------------------------------------


def cdc_from_ccd(g: CubicGraph, m: PseudoMatching, ccd: CycleSet) -> CycleSet:
    """Lift each CCD cycle through the contraction and append the complement
    cycles, producing a cycle double cover of g."""
    cg = contract(g, m)
    bad = verify_ccd_compatible(cg, ccd)
    if bad is not None:
        raise GraphError(f"not a compatible cycle decomposition: {bad.message}")

    mg = g.graph
    comp_info: dict[int, tuple[str, tuple]] = {}
    for comp in m.components:
        if isinstance(comp, K2Component):
            a, b = mg.edges[comp.edge]
            comp_info[cg.component_of[a]] = ("k2", (a, b, comp.edge))
        else:
            legs = {mg.other_end(e, comp.center): e for e in comp.leaf_edges}
            comp_info[cg.component_of[comp.center]] = ("claw", (comp.center, legs))

    lifted: list[Cycle] = []
    for cyc in ccd.cycles:
        lifted.append(_lift_cycle(mg, cg, comp_info, cyc))
    for cv in complement_cycles(g, m):
        lifted.append(cycle_from_vertices(mg, cv))
    out = CycleSet(tuple(lifted), CDC)
    bad = verify_cycle_set(mg, out)
    if bad is not None:
        raise GraphError(f"lift did not produce a CDC: {bad.message}")
    return out


def _lift_cycle(
    mg: Multigraph,
    cg: ContractedGraph,
    comp_info: dict[int, tuple[str, tuple]],
    cyc: Cycle,
) -> Cycle:
    if len(cyc) == 1:
        # A quotient loop: its origin edge joins two vertices of one
        # component; close it up through the component's inside.
        o = cg.edge_origin[cyc.edges[0]]
        x, y = mg.edges[o]
        kind, data = comp_info[cyc.vertices[0]]
        if kind == "k2":
            _a, _b, e = data
            lift = Cycle((x, y), (o, e))
        else:
            center, legs = data
            lift = Cycle((x, y, center), (o, legs[y], legs[x]))
        check_cycle(mg, lift)
        return lift
    verts: list[int] = []
    edges: list[int] = []
    k = len(cyc.edges)
    for i in range(k):
        q = cyc.vertices[i]
        o_in = cg.edge_origin[cyc.edges[i - 1]]
        o_out = cg.edge_origin[cyc.edges[i]]
        w_in = _endpoint_in(mg, o_in, cg, q, prefer_not=None)
        w_out = _endpoint_in(mg, o_out, cg, q, prefer_not=w_in)
        if w_in == w_out:
            raise GraphError("lift hit a transition pair; compatibility broken")
        kind, data = comp_info[q]
        if kind == "k2":
            _a, _b, e = data
            verts.extend([w_in, w_out])
            edges.extend([e, o_out])
        else:
            center, legs = data
            verts.extend([w_in, center, w_out])
            edges.extend([legs[w_in], legs[w_out], o_out])
    lift = Cycle(tuple(verts), tuple(edges))
    check_cycle(mg, lift)
    return lift


def _endpoint_in(
    mg: Multigraph, edge: int, cg: ContractedGraph, q: int, prefer_not: int | None
) -> int:
    a, b = mg.edges[edge]
    hits = [v for v in (a, b) if cg.component_of[v] == q]
    if not hits:
        raise GraphError(f"edge {edge} has no endpoint in component {q}")
    if len(hits) == 2 and prefer_not is not None and hits[0] == prefer_not:
        return hits[1]
    return hits[0]


# ---------------------------------------------------------------------------
# Intersection graphs and chromatic number
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionGraph:
    graph: Multigraph  # vertex i corresponds to cycle i


def intersection_graph(s: CycleSet) -> IntersectionGraph:
    k = len(s.cycles)
    edges = []
    vsets = [set(c.vertices) for c in s.cycles]
    for i in range(k):
        for j in range(i + 1, k):
            if vsets[i] & vsets[j]:
                edges.append((i, j))
    return IntersectionGraph(Multigraph(k, edges))


def chromatic_number(g: Multigraph) -> int:
    if any(a == b for a, b in g.edges):
        raise GraphError("chromatic number undefined with loops")
    n = g.n
    if n == 0:
        return 0
    adj = [g.adjacency_mask(v) for v in range(n)]
    if not any(adj):
        return 1
    order = sorted(range(n), key=lambda v: (-bin(adj[v]).count("1"), v))
    best = [n]
    colors = [0] * n

    def rec(i: int, used: int) -> None:
        if used >= best[0]:
            return
        if i == n:
            best[0] = used
            return
        v = order[i]
        taken = 0
        for u in range(n):
            if colors[u] and adj[v] >> u & 1:
                taken |= 1 << colors[u]
        for c in range(1, min(used + 1, best[0] - 1) + 1):
            if taken >> c & 1:
                continue
            colors[v] = c
            rec(i + 1, max(used, c))
            colors[v] = 0

    rec(0, 0)
    return best[0]


# ---------------------------------------------------------------------------
# CCDs from proper 3-edge-colorings
# ---------------------------------------------------------------------------


def ccd_from_coloring(
    g: CubicGraph, m: PseudoMatching, coloring: EdgeColoring
) -> CycleSet:
    """Push a proper 3-edge-coloring of g to G/M and split the color classes
    into cycles; the result is a CCD whose intersection graph is 3-colorable."""
    if not coloring_is_proper(g.graph, coloring):
        raise GraphError("coloring is not a proper 3-edge-coloring")
    cg = contract(g, m)
    cycles: list[Cycle] = []
    for color in (1, 2, 3):
        class_edges = [
            qe
            for qe in range(cg.graph.m)
            if coloring.color_of[cg.edge_origin[qe]] == color
        ]
        cycles.extend(_edge_disjoint_cycles(cg.graph, class_edges))
    out = CycleSet(tuple(cycles), CCD)
    bad = verify_ccd_compatible(cg, out)
    if bad is not None:
        raise GraphError(f"color classes not compatible: {bad.message}")
    return out


def _edge_disjoint_cycles(g: Multigraph, edges: list[int]) -> list[Cycle]:
    """Split an even subgraph whose vertices all have degree 0 or 2 (loops
    counting 2) into its cycles; loops become length-1 cycles."""
    plain: list[int] = []
    out: list[Cycle] = []
    for e in sorted(edges):
        a, b = g.edges[e]
        if a == b:
            out.append(Cycle((a,), (e,)))
        else:
            plain.append(e)
    at: dict[int, list[int]] = {}
    for e in plain:
        a, b = g.edges[e]
        at.setdefault(a, []).append(e)
        at.setdefault(b, []).append(e)
    for v, inc in at.items():
        if len(inc) != 2:
            raise GraphError(f"vertex {v} has {len(inc)} class edges, expected 2")
    unused = set(plain)
    while unused:
        e0 = min(unused)
        a, b = g.edges[e0]
        verts = [a]
        eds = [e0]
        unused.discard(e0)
        v = b
        while v != a:
            verts.append(v)
            e = next(x for x in at[v] if x in unused)
            unused.discard(e)
            eds.append(e)
            v = g.other_end(e, v)
        out.append(Cycle(tuple(verts), tuple(eds)))
    return out


# ---------------------------------------------------------------------------
# Reduction along non-stable dominating cycles
# ---------------------------------------------------------------------------

TAG_STABLE = "stable"
TAG_CYCLE = "cycle"
TAG_STUCK = "stuck"


@dataclass(frozen=True)
class ReductionLevel:
    graph3: CubicGraph
    cycle: Cycle
    stable: bool
    chosen_c1: Cycle | None
    extracted: tuple[Cycle, ...]  # disjoint compatible cycles on this level


@dataclass(frozen=True)
class ReductionTrace:
    levels: tuple[ReductionLevel, ...]
    tag: str
    contraction: ContractedGraph
    decomposition: CycleSet | None  # compatible decomposition of the top quotient


def sabidussi_reduce(g3: CubicGraph, c: Cycle) -> ReductionTrace:
    """Reduce (g3, c) along strictly larger dominating cycles until the
    residue is a bare cycle or the current cycle is stable, then reassemble
    a compatible decomposition of the top quotient on the way back up.

    A stable level whose contraction admits no CCD ends the trace with tag
    "stuck"; such instances are surfaced, never silently skipped.
    """
    check_cycle(g3.graph, c)
    if not is_dominating(g3, set(c.vertices)):
        raise GraphError("reduction requires a dominating cycle")
    levels, tag, cycles, cg = _reduce_level(g3, c)
    if cycles is None:
        return ReductionTrace(tuple(levels), tag, cg, None)
    decomposition = CycleSet(tuple(cycles), CCD)
    bad = verify_ccd_compatible(cg, decomposition)
    if bad is not None:
        raise GraphError(f"reassembled decomposition invalid: {bad.message}")
    return ReductionTrace(tuple(levels), tag, cg, decomposition)


def _reduce_level(
    g3: CubicGraph, c: Cycle
) -> tuple[list[ReductionLevel], str, list[Cycle] | None, ContractedGraph]:
    m = ppm_from_dominating_cycle(g3, list(c.vertices), list(c.edges))
    cg = contract(g3, m)

    c1 = _least_larger_cycle(g3.graph, c)
    if c1 is None:
        ccd = find_ccd(cg)
        level = ReductionLevel(g3, c, True, None, ())
        if ccd is None:
            return [level], TAG_STUCK, None, cg
        return [level], TAG_STABLE, list(ccd.cycles), cg

    extracted = _extract_off_cycle(cg, c1)
    level = ReductionLevel(g3, c, False, c1, tuple(extracted))
    used: set[int] = set()
    for cyc in extracted:
        used |= cyc.edge_set()
    kept_qedges = [qe for qe in range(cg.graph.m) if qe not in used]

    deg = [0] * cg.graph.n
    for qe in kept_qedges:
        a, b = cg.graph.edges[qe]
        deg[a] += 1
        deg[b] += 1

    if all(d in (0, 2) for d in deg):
        residual = _edge_disjoint_cycles(cg.graph, kept_qedges)
        if len(residual) != 1:
            raise GraphError("residual trail is not a single cycle")
        return [level], TAG_CYCLE, extracted + residual, cg

    transits = _c1_transits(cg, g3, c1)
    gprime, tprime, chains, kept_vertices = _suppress(
        cg.graph, kept_qedges, deg, transits
    )
    assoc = associate(gprime, tprime)
    _assert_roundtrip(assoc, gprime)

    c_eps = Cycle(assoc.cycle, assoc.cycle_edges)
    check_cycle(assoc.graph3.graph, c_eps)
    sub_levels, tag, sub_cycles, _sub_cg = _reduce_level(assoc.graph3, c_eps)
    if sub_cycles is None:
        return [level] + sub_levels, tag, None, cg
    expanded = [
        _expand_chains(cyc, chains, kept_vertices) for cyc in sub_cycles
    ]
    return [level] + sub_levels, tag, extracted + expanded, cg


def _least_larger_cycle(g: Multigraph, c: Cycle) -> Cycle | None:
    target = c.edge_set()
    best: Cycle | None = None
    best_key: tuple[int, ...] | None = None
    for d in cycles_containing(g, set(c.vertices)):
        if d.edge_set() == target:
            continue
        key = tuple(sorted(d.edges))
        if best_key is None or key < best_key:
            best, best_key = d, key
    return best


def _extract_off_cycle(cg: ContractedGraph, c1: Cycle) -> list[Cycle]:
    """Quotient edges missed by C1 form vertex-disjoint compatible cycles."""
    on_c1 = c1.edge_set()
    off = [qe for qe, orig in enumerate(cg.edge_origin) if orig not in on_c1]
    if not off:
        raise GraphError("larger dominating cycle left nothing to extract")
    sdeg = [0] * cg.graph.n
    for qe in off:
        a, b = cg.graph.edges[qe]
        sdeg[a] += 1
        sdeg[b] += 1
    if any(d > 2 for d in sdeg):
        raise GraphError("extracted edges are not vertex-disjoint cycles")
    cycles = _edge_disjoint_cycles(cg.graph, off)
    for cyc in cycles:
        for v in cyc.vertices:
            for pair in cg.transitions.pairs(v):
                if _pair_hits(pair, cyc.edge_set()) > 1:
                    raise GraphError("extracted cycle is not compatible")
    return cycles


def _c1_transits(
    cg: ContractedGraph, g3: CubicGraph, c1: Cycle
) -> dict[int, list[frozenset[int]]]:
    """Transition pairs induced on the quotient by the larger cycle's trail."""
    q_of_orig = {orig: qe for qe, orig in enumerate(cg.edge_origin)}
    k = len(c1.edges)
    non_m_positions = [i for i in range(k) if c1.edges[i] in q_of_orig]
    transits: dict[int, list[frozenset[int]]] = {}
    for idx, pos in enumerate(non_m_positions):
        nxt = non_m_positions[(idx + 1) % len(non_m_positions)]
        e_out = c1.edges[pos]
        e_in = c1.edges[nxt]
        mid_vertex = c1.vertices[(pos + 1) % k]
        q = cg.component_of[mid_vertex]
        transits.setdefault(q, []).append(
            frozenset({q_of_orig[e_out], q_of_orig[e_in]})
        )
    return transits


@dataclass(frozen=True)
class _Chain:
    qedges: tuple[int, ...]  # quotient edges, ordered from q_from to q_to
    interior: tuple[int, ...]  # suppressed quotient vertices along the way
    q_from: int
    q_to: int


def _suppress(
    qg: Multigraph,
    kept_qedges: list[int],
    deg: list[int],
    transits: dict[int, list[frozenset[int]]],
) -> tuple[Multigraph, TransitionSystem, list[_Chain], list[int]]:
    """Suppress degree-2 vertices of the trail subgraph.

    Returns the suppressed multigraph (vertex i = kept_vertices[i]), its
    trail transition system, and per new edge the chain it replaces.
    """
    kept_vertices = [v for v in range(qg.n) if deg[v] >= 4]
    if not kept_vertices:
        raise GraphError("nothing left after suppression")
    for v in kept_vertices:
        if deg[v] not in (4, 6):
            raise GraphError(f"suppression left vertex {v} with degree {deg[v]}")
    new_id = {v: i for i, v in enumerate(kept_vertices)}
    incident: dict[int, list[int]] = {}
    for qe in kept_qedges:
        a, b = qg.edges[qe]
        incident.setdefault(a, []).append(qe)
        if b != a:
            incident.setdefault(b, []).append(qe)

    chains: list[_Chain] = []
    chain_end_of: dict[tuple[int, int], int] = {}  # (end qedge, kept vertex) -> chain
    new_edges: list[tuple[int, int]] = []
    seen_q: set[int] = set()
    for v in kept_vertices:
        for qe in sorted(incident.get(v, [])):
            if qe in seen_q:
                continue
            a, b = qg.edges[qe]
            if a == b:
                # A kept quotient loop stays a loop chain of length 1.
                seen_q.add(qe)
                cid = len(new_edges)
                new_edges.append((new_id[v], new_id[v]))
                chains.append(_Chain((qe,), (), v, v))
                chain_end_of[(qe, v)] = cid
                continue
            chain_edges = [qe]
            interior: list[int] = []
            cur = qg.other_end(qe, v)
            e = qe
            while deg[cur] == 2:
                interior.append(cur)
                e = next(x for x in incident[cur] if x != e)
                cur = qg.other_end(e, cur)
                chain_edges.append(e)
            seen_q.update(chain_edges)
            cid = len(new_edges)
            new_edges.append((new_id[v], new_id[cur]))
            chains.append(_Chain(tuple(chain_edges), tuple(interior), v, cur))
            chain_end_of[(chain_edges[0], v)] = cid
            chain_end_of[(chain_edges[-1], cur)] = cid
    if seen_q != set(kept_qedges):
        raise GraphError("trail subgraph has a component without kept vertices")
    gprime = Multigraph(len(kept_vertices), new_edges)

    pair_lists: list[list[frozenset[int]]] = [[] for _ in range(gprime.n)]
    for v in kept_vertices:
        for pair in transits.get(v, []):
            mapped = frozenset(chain_end_of[(qe, v)] for qe in pair)
            pair_lists[new_id[v]].append(mapped)
    return gprime, TransitionSystem(tuple(tuple(p) for p in pair_lists)), chains, kept_vertices


def _assert_roundtrip(assoc: Association, gprime: Multigraph) -> None:
    m = ppm_from_dominating_cycle(
        assoc.graph3, list(assoc.cycle), list(assoc.cycle_edges)
    )
    back = contract(assoc.graph3, m)
    if back.graph.n != gprime.n or back.graph.edges != gprime.edges:
        raise GraphError("association round-trip failed to recover the quotient")


def _expand_chains(
    cyc: Cycle, chains: list[_Chain], kept_vertices: list[int]
) -> Cycle:
    """Map a suppressed-graph cycle back to a quotient cycle through chains."""
    verts: list[int] = []
    edges: list[int] = []
    k = len(cyc.edges)
    for i in range(k):
        chain = chains[cyc.edges[i]]
        start_q = kept_vertices[cyc.vertices[i]]
        if chain.q_from == start_q:
            qedges, interior = chain.qedges, chain.interior
        elif chain.q_to == start_q:
            qedges = tuple(reversed(chain.qedges))
            interior = tuple(reversed(chain.interior))
        else:
            raise GraphError("chain does not touch the cycle vertex")
        verts.append(start_q)
        verts.extend(interior)
        edges.extend(qedges)
    return Cycle(tuple(verts), tuple(edges))
