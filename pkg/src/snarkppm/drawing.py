"""Drawings with pseudo-matching-avoiding crossings.

A drawing is kept purely combinatorially: the planarization (original
vertices plus one degree-4 dummy per crossing), its rotation system, the
list of crossing pairs, and the path of planarized edges each original edge
maps to. New edges are inserted along face paths of the partial
planarization; every produced embedding is checked against Euler's formula.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable

from .embedding import PlanarEmbedding
from .minors import is_planar
from .multigraph import CubicGraph, GraphError, Multigraph
from .ppm import (
    ContractedGraph,
    K2Component,
    PseudoMatching,
    contract,
    validate_ppm,
)

Dart = tuple[int, int]


@dataclass(frozen=True)
class Drawing:
    base: CubicGraph
    ppm: PseudoMatching
    planarized: Multigraph
    embedding: PlanarEmbedding
    crossings: tuple[tuple[int, int], ...]  # pairs of original edge ids
    crossing_dummies: tuple[int, ...]  # dummy vertex per crossing
    segment_map: dict[int, tuple[int, ...]]  # original edge -> planarized path


def validate_drawing(d: Drawing) -> None:
    """Check all structural invariants; raises GraphError on the first breach."""
    g = d.base.graph
    m_edges = d.ppm.edge_set(g)
    seen_pairs = set()
    for e, f in d.crossings:
        if e in m_edges or f in m_edges:
            raise GraphError(f"crossing ({e},{f}) involves a pseudo-matching edge")
        pair = frozenset({e, f})
        if len(pair) != 2:
            raise GraphError(f"crossing ({e},{f}) pairs an edge with itself")
        if pair in seen_pairs:
            raise GraphError(f"edges {e},{f} cross more than once")
        seen_pairs.add(pair)
        if set(g.edges[e]) & set(g.edges[f]):
            raise GraphError(f"adjacent edges {e},{f} cross")

    owner: dict[int, int] = {}
    for orig, path in d.segment_map.items():
        for pe in path:
            if pe in owner:
                raise GraphError(f"planarized edge {pe} owned twice")
            owner[pe] = orig
    if len(owner) != d.planarized.m:
        raise GraphError("segment map does not cover the planarization")

    for ci, dummy in enumerate(d.crossing_dummies):
        if d.planarized.degree(dummy) != 4:
            raise GraphError(f"dummy {dummy} has degree {d.planarized.degree(dummy)}")
        ring = d.embedding.rotation[dummy]
        owners = [owner[dart[0]] for dart in ring]
        if owners[0] != owners[2] or owners[1] != owners[3] or owners[0] == owners[1]:
            raise GraphError(f"dummy {dummy} does not alternate its edges: {owners}")
        if frozenset({owners[0], owners[1]}) != frozenset(d.crossings[ci]):
            raise GraphError(f"dummy {dummy} owners disagree with crossing {ci}")

    for orig, path in d.segment_map.items():
        a, b = g.edges[orig]
        at = a
        for pe in path:
            x, y = d.planarized.edges[pe]
            if at == x:
                at = y
            elif at == y:
                at = x
            else:
                raise GraphError(f"segment path of edge {orig} is not connected")
        if at != b:
            raise GraphError(f"segment path of edge {orig} ends at {at}, not {b}")

    d.embedding.verify_euler()


def crossings_component_local(g: CubicGraph, m: PseudoMatching, d: Drawing) -> bool:
    """True iff every crossing pair is incident to two different vertices of
    a single pseudo-matching component."""
    comps = m.component_vertices(g.graph)
    comp_of = {}
    for ci, verts in enumerate(comps):
        for v in verts:
            comp_of[v] = ci
    return all(
        _component_local(g.graph, comp_of, e, f) for e, f in d.crossings
    )


def _component_local(g: Multigraph, comp_of: dict[int, int], e: int, f: int) -> bool:
    for p in g.edges[e]:
        for q in g.edges[f]:
            if p != q and comp_of[p] == comp_of[q]:
                return True
    return False


# ---------------------------------------------------------------------------
# Incremental planarization
# ---------------------------------------------------------------------------


class _Planarizer:
    """Planar rotation system under edge insertion with crossings.

    Edges carry owner tokens; subdividing keeps the owner. Face tracing uses
    the convention succ(d) = rotation successor of twin(d) at head(d).
    """

    def __init__(self) -> None:
        self.nv = 0
        self.edges: list[tuple[int, int]] = []
        self.owner: list[object] = []
        self.alive: list[bool] = []
        self.rot: dict[int, list[Dart]] = {}

    def new_vertex(self) -> int:
        v = self.nv
        self.nv += 1
        self.rot[v] = []
        return v

    def seed_edge(self, a: int, b: int, owner: object) -> int:
        """Append an edge without touching rotations (caller seeds those)."""
        e = len(self.edges)
        self.edges.append((a, b))
        self.owner.append(owner)
        self.alive.append(True)
        return e

    def tail(self, d: Dart) -> int:
        return self.edges[d[0]][d[1]]

    def head(self, d: Dart) -> int:
        return self.edges[d[0]][1 - d[1]]

    def _succ(self, d: Dart) -> Dart:
        twin = (d[0], 1 - d[1])
        ring = self.rot[self.head(d)]
        return ring[(ring.index(twin) + 1) % len(ring)]

    def face_walk(self, d0: Dart) -> list[Dart]:
        walk = [d0]
        d = self._succ(d0)
        while d != d0:
            walk.append(d)
            d = self._succ(d)
        return walk

    def faces(self) -> tuple[list[list[Dart]], dict[Dart, int]]:
        face_of: dict[Dart, int] = {}
        walks: list[list[Dart]] = []
        for v in range(self.nv):
            for dart in self.rot[v]:
                if dart in face_of:
                    continue
                fid = len(walks)
                walk = self.face_walk(dart)
                for d in walk:
                    face_of[d] = fid
                walks.append(walk)
        return walks, face_of

    def verify_planar(self) -> None:
        comp = self._components()
        walks, _ = self.faces()
        fcount: dict[int, int] = {}
        for walk in walks:
            c = comp[self.tail(walk[0])]
            fcount[c] = fcount.get(c, 0) + 1
        vcount: dict[int, int] = {}
        ecount: dict[int, int] = {}
        for v in range(self.nv):
            vcount[comp[v]] = vcount.get(comp[v], 0) + 1
        for e, (a, _b) in enumerate(self.edges):
            if self.alive[e]:
                ecount[comp[a]] = ecount.get(comp[a], 0) + 1
        for c, ec in ecount.items():
            if vcount[c] - ec + fcount.get(c, 0) != 2:
                raise GraphError("planarizer state is not planar")

    def _components(self) -> dict[int, int]:
        comp: dict[int, int] = {}
        next_id = 0
        for s in range(self.nv):
            if s in comp:
                continue
            comp[s] = next_id
            frontier = [s]
            while frontier:
                v = frontier.pop()
                for dart in self.rot[v]:
                    w = self.head(dart)
                    if w not in comp:
                        comp[w] = next_id
                        frontier.append(w)
            next_id += 1
        return comp

    # -- modification --------------------------------------------------------

    def subdivide(self, e: int) -> int:
        """Split live edge e = (x, y) at a new dummy, preserving faces.

        New edges are (x, dummy) and (dummy, y) with e's owner.
        """
        x, y = self.edges[e]
        d = self.new_vertex()
        self.alive[e] = False
        e1 = self.seed_edge(x, d, self.owner[e])
        e2 = self.seed_edge(d, y, self.owner[e])
        self._replace_dart(x, (e, 0), (e1, 0))
        self._replace_dart(y, (e, 1), (e2, 1))
        self.rot[d] = [(e1, 1), (e2, 0)]
        return d

    def _replace_dart(self, v: int, old: Dart, new: Dart) -> None:
        ring = self.rot[v]
        ring[ring.index(old)] = new

    def connect_darts(self, da: Dart, db: Dart, owner: object) -> int:
        """Insert an edge from tail(da) to tail(db) across the face that has
        da and db on its boundary (validity is the caller's responsibility)."""
        u, v = self.tail(da), self.tail(db)
        e = self.seed_edge(u, v, owner)
        ru = self.rot[u]
        ru.insert(ru.index(da), (e, 0))
        rv = self.rot[v]
        rv.insert(rv.index(db), (e, 1))
        return e

    def connect(self, u: int, v: int, owner: object) -> int:
        """Insert edge (u, v) inside some face containing both."""
        for da in list(self.rot[u]):
            for d in self.face_walk(da):
                if self.tail(d) == v:
                    return self.connect_darts(da, d, owner)
        raise GraphError(f"vertices {u} and {v} share no face")

    def _find_route(
        self, u: int, v: int, can_cross: Callable[[object], bool]
    ) -> tuple[Dart, list[Dart]]:
        """Shortest face path from u to v; returns (start dart, crossed darts).

        A crossed dart lies on the face being left; distinct owners only.
        An empty dart list means u and v already share a face.
        """
        if not self.rot[u] or not self.rot[v]:
            raise GraphError("route endpoints must already carry an edge")
        walks, face_of = self.faces()
        sources: dict[int, Dart] = {}
        for da in self.rot[u]:
            sources.setdefault(face_of[da], da)
        targets = {face_of[d] for d in self.rot[v]}
        hit = set(sources) & targets
        if hit:
            return sources[min(hit)], []
        prev: dict[int, tuple[int, Dart]] = {}
        seen = set(sources)
        queue = deque(sorted(sources))
        found = None
        while queue and found is None:
            f = queue.popleft()
            for dart in walks[f]:
                e = dart[0]
                if not can_cross(self.owner[e]):
                    continue
                g = face_of[(e, 1 - dart[1])]
                if g in seen:
                    continue
                seen.add(g)
                prev[g] = (f, dart)
                if g in targets:
                    found = g
                    break
                queue.append(g)
        if found is None:
            raise GraphError("no face route between endpoints")
        path: list[Dart] = []
        cur = found
        while cur not in sources:
            f, dart = prev[cur]
            path.append(dart)
            cur = f
        path.reverse()
        owners = [self.owner[d[0]] for d in path]
        if len(set(owners)) != len(owners):
            return self._route_dedup(walks, face_of, sources, targets, can_cross,
                                     len(path) + 4)
        return sources[cur], path

    def _route_dedup(self, walks, face_of, sources, targets, can_cross, cap):
        """Depth-limited search keeping crossed owners distinct on the path."""
        out: list[tuple[Dart, list[Dart]]] = []

        def dfs(f: int, owners: frozenset, path: list[Dart]) -> bool:
            if f in targets and path:
                return True
            if len(path) >= cap:
                return False
            for dart in walks[f]:
                e = dart[0]
                own = self.owner[e]
                if own in owners or not can_cross(own):
                    continue
                g = face_of[(e, 1 - dart[1])]
                path.append(dart)
                if dfs(g, owners | {own}, path):
                    return True
                path.pop()
            return False

        for f, da in sorted(sources.items()):
            path: list[Dart] = []
            if dfs(f, frozenset(), path):
                out.append((da, path))
                break
        if not out:
            raise GraphError("no owner-distinct face route between endpoints")
        return out[0]

    # -- extraction ----------------------------------------------------------

    def live_graph(self) -> tuple[Multigraph, dict[int, int], PlanarEmbedding]:
        live = [e for e in range(len(self.edges)) if self.alive[e]]
        remap = {e: i for i, e in enumerate(live)}
        g = Multigraph(self.nv, [self.edges[e] for e in live])
        rot = {v: [(remap[e], s) for e, s in self.rot[v]] for v in range(self.nv)}
        emb = PlanarEmbedding(g, rot)
        return g, remap, emb

    def owner_chain(self, owner: object, start: int) -> list[int]:
        """Live edges of one owner, ordered as a path starting at start."""
        mine = [
            e
            for e in range(len(self.edges))
            if self.alive[e] and self.owner[e] == owner
        ]
        at: dict[int, list[int]] = {}
        for e in mine:
            a, b = self.edges[e]
            at.setdefault(a, []).append(e)
            at.setdefault(b, []).append(e)
        chain = []
        cur = start
        prev_edge = -1
        for _ in range(len(mine)):
            e = next(x for x in at[cur] if x != prev_edge)
            chain.append(e)
            a, b = self.edges[e]
            cur = b if cur == a else a
            prev_edge = e
        return chain


# ---------------------------------------------------------------------------
# draw_m_avoiding
# ---------------------------------------------------------------------------


def draw_m_avoiding(
    g: CubicGraph, m: PseudoMatching, edge_order: list[int] | None = None
) -> Drawing:
    """Draw g so that all crossings avoid the pseudo-matching edges.

    Starts from a greedy maximal planar subgraph seeded with the matching,
    then inserts each leftover edge along a shortest face path, one dummy
    per crossed segment. Crossing counts are heuristic, not minimal.
    ``edge_order`` varies the greedy consideration and routing order of the
    non-matching edges (default: ascending edge index).
    """
    bad = validate_ppm(g, m)
    if bad is not None:
        raise GraphError(f"invalid PPM: {bad.message}")
    mg = g.graph
    if not mg.is_connected():
        raise GraphError("drawing requires a connected graph")
    m_set = m.edge_set(mg)
    if edge_order is None:
        edge_order = [e for e in range(mg.m) if e not in m_set]
    if sorted(edge_order) != sorted(e for e in range(mg.m) if e not in m_set):
        raise GraphError("edge_order must list the non-matching edges")

    kept = sorted(m_set)
    for e in edge_order:
        trial = sorted(kept + [e])
        if is_planar(Multigraph(mg.n, [mg.edges[x] for x in trial])) is not None:
            kept = trial
    leftover = [e for e in edge_order if e not in kept]

    sub = Multigraph(mg.n, [mg.edges[x] for x in kept])
    emb = is_planar(sub)
    if emb is None:
        raise GraphError("planar subgraph stage failed")

    pl = _Planarizer()
    for _ in range(mg.n):
        pl.new_vertex()
    for orig in kept:
        pl.seed_edge(*mg.edges[orig], orig)
    # Planarizer edge i mirrors sub edge i (both enumerate kept in order).
    for v in range(mg.n):
        pl.rot[v] = list(emb.rotation[v])

    crossings: list[tuple[int, int]] = []
    dummies: list[int] = []
    for e in leftover:
        a, b = mg.edges[e]
        ends = set(mg.edges[e])

        def can_cross(owner: object, _ends=ends) -> bool:
            if not isinstance(owner, int) or owner in m_set:
                return False
            return not (_ends & set(mg.edges[owner]))

        made = _routed(pl, a, b, e, can_cross)
        for crossed_owner, dummy in made:
            crossings.append((min(e, crossed_owner), max(e, crossed_owner)))
            dummies.append(dummy)

    return _finish_drawing(g, m, pl, crossings, dummies)


def _routed(pl: _Planarizer, a, b, owner, can_cross):
    """Insert edge (a, b), crossing only segments can_cross allows.

    Returns (crossed owner, dummy vertex) per crossing, in order from a.
    """
    cur_dart, path = pl._find_route(a, b, can_cross)
    crossings: list[tuple[object, int]] = []
    for hop in path:
        e, s = hop
        crossed_owner = pl.owner[e]
        dummy = pl.subdivide(e)
        e1, e2 = len(pl.edges) - 2, len(pl.edges) - 1
        same_side = (e2, 0) if s == 0 else (e1, 1)
        beyond = (e1, 1) if s == 0 else (e2, 0)
        pl.connect_darts(cur_dart, same_side, owner)
        crossings.append((crossed_owner, dummy))
        cur_dart = beyond
    for d in pl.face_walk(cur_dart):
        if pl.tail(d) == b:
            pl.connect_darts(cur_dart, d, owner)
            return crossings
    raise GraphError("route lost its target face")


def _finish_drawing(
    g: CubicGraph,
    m: PseudoMatching,
    pl: _Planarizer,
    crossings: list[tuple[int, int]],
    dummies: list[int],
) -> Drawing:
    plan, remap, emb = pl.live_graph()
    segment_map: dict[int, tuple[int, ...]] = {}
    for orig in range(g.graph.m):
        a, _b = g.graph.edges[orig]
        chain = pl.owner_chain(orig, a)
        segment_map[orig] = tuple(remap[e] for e in chain)
    d = Drawing(g, m, plan, emb, tuple(crossings), tuple(dummies), segment_map)
    validate_drawing(d)
    return d


# ---------------------------------------------------------------------------
# seek_planarizing_drawing
# ---------------------------------------------------------------------------


def seek_planarizing_drawing(g: CubicGraph, m: PseudoMatching) -> Drawing | None:
    """Witness drawing with component-local crossings, when M is planarizing.

    Built from a planar embedding of G/M by replacing each quotient vertex
    with a disk holding its component; quotient edge ends become legs routed
    inside the disk, so crossings only pair edges that are incident to
    different vertices of one component. Quotient loops (edges joining two
    vertices of one component) never leave their disk and are routed there
    directly. Returns None when G/M is nonplanar.
    """
    bad = validate_ppm(g, m)
    if bad is not None:
        raise GraphError(f"invalid PPM: {bad.message}")
    cg = contract(g, m)
    if is_planar(cg.graph) is None:
        return None
    mg = g.graph

    # Embed the loopless skeleton; loops are internal to their patches.
    nonloop = [qe for qe, (a, b) in enumerate(cg.graph.edges) if a != b]
    skeleton = Multigraph(cg.graph.n, [cg.graph.edges[qe] for qe in nonloop])
    sk_emb = is_planar(skeleton)
    if sk_emb is None:
        raise GraphError("loopless quotient of a planar graph must embed")
    internal: dict[int, list[int]] = {}
    for qe, (a, b) in enumerate(cg.graph.edges):
        if a == b:
            internal.setdefault(a, []).append(cg.edge_origin[qe])

    crossed_pairs: set[frozenset[int]] = set()
    patches: list[_Patch] = []
    for q in range(cg.graph.n):
        comp = _component_of_quotient(mg, m, cg, q)
        darts = [(nonloop[e], s) for e, s in sk_emb.rotation[q]]
        patches.append(
            _build_patch(
                mg, cg, q, darts, comp, internal.get(q, []), crossed_pairs
            )
        )
    drawing = _glue_patches(g, m, cg, patches)
    if not crossings_component_local(g, m, drawing):
        raise GraphError("witness drawing has a non-component-local crossing")
    return drawing


@dataclass
class _Patch:
    quotient_vertex: int
    pl: _Planarizer
    local_of_gvertex: dict[int, int]
    boundary_count: int  # b-nodes are local ids 0..boundary_count-1
    stub_of_dart: dict[Dart, int]  # quotient dart -> its b-node local id
    crossings: list[tuple[int, int]]  # original edge pairs, in order
    crossing_dummies: list[int]  # local dummy ids


def _component_of_quotient(
    mg: Multigraph, m: PseudoMatching, cg: ContractedGraph, q: int
) -> tuple[str, tuple]:
    for comp in m.components:
        if isinstance(comp, K2Component):
            a, b = mg.edges[comp.edge]
            if cg.component_of[a] == q:
                return ("k2", (a, b, comp.edge))
        else:
            if cg.component_of[comp.center] == q:
                leaves = tuple(
                    mg.other_end(e, comp.center) for e in comp.leaf_edges
                )
                return ("claw", (comp.center, leaves, comp.leaf_edges))
    raise GraphError(f"no component for quotient vertex {q}")


def _leg_target(mg: Multigraph, cg: ContractedGraph, dart: Dart) -> int:
    qe, side = dart
    return mg.edges[cg.edge_origin[qe]][side]


def _owner_origin(cg: ContractedGraph, owner: object) -> int | None:
    """Original edge id behind a routable patch owner, else None."""
    if not isinstance(owner, tuple):
        return None
    if owner[0] == "G":
        return cg.edge_origin[owner[1][0]]
    if owner[0] == "I":
        return owner[1]
    return None


def _build_patch(
    mg: Multigraph,
    cg: ContractedGraph,
    q: int,
    darts: list[Dart],
    comp: tuple[str, tuple],
    internal_origins: list[int],
    crossed_pairs: set[frozenset[int]],
) -> _Patch:
    # Boundary positions are fixed by the quotient rotation (the interior
    # sees it mirrored); greedy routing can wall a later leg off, so retry
    # with different routing orders, which never move the boundary.
    base = list(reversed(darts))
    k2 = len(base)
    orders: list[list[int]] = [[]] if k2 == 0 else []
    for shift in range(k2):
        seq = list(range(shift, k2)) + list(range(0, shift))
        orders.append(seq)
        orders.append([seq[0]] + list(reversed(seq[1:])))
    last_error: GraphError | None = None
    for order in orders:
        snapshot = set(crossed_pairs)
        try:
            return _try_patch(
                mg, cg, q, base, order, comp, internal_origins, crossed_pairs
            )
        except GraphError as exc:
            crossed_pairs.clear()
            crossed_pairs.update(snapshot)
            last_error = exc
    raise GraphError(f"patch for quotient vertex {q} failed: {last_error}")


def _try_patch(
    mg: Multigraph,
    cg: ContractedGraph,
    q: int,
    darts: list[Dart],
    route_order: list[int],
    comp: tuple[str, tuple],
    internal_origins: list[int],
    crossed_pairs: set[frozenset[int]],
) -> _Patch:
    k2 = len(darts)
    pl = _Planarizer()
    for _ in range(k2):
        pl.new_vertex()
    b_edges = [pl.seed_edge(i, (i + 1) % k2, "B") for i in range(k2)] if k2 else []
    for i in range(k2):
        pl.rot[i] = [(b_edges[i], 0), (b_edges[(i - 1) % k2], 1)]

    local_of: dict[int, int] = {}
    kind, data = comp
    if kind == "k2":
        a, b, me = data
        local_of[a] = pl.new_vertex()
        local_of[b] = pl.new_vertex()
        em = pl.seed_edge(local_of[a], local_of[b], ("M", me))
        pl.rot[local_of[a]] = [(em, 0)]
        pl.rot[local_of[b]] = [(em, 1)]
    else:
        center, leaves, leaf_edges = data
        local_of[center] = pl.new_vertex()
        # Claw arms take the order the interior first meets each leaf.
        order: list[int] = []
        for dart in darts:
            t = _leg_target(mg, cg, dart)
            if t not in order:
                order.append(t)
        for leaf in leaves:
            if leaf not in order:
                order.append(leaf)
        ring = []
        for leaf in order:
            local_of[leaf] = pl.new_vertex()
            em = pl.seed_edge(
                local_of[center], local_of[leaf], ("M", leaf_edges[leaves.index(leaf)])
            )
            ring.append((em, 0))
            pl.rot[local_of[leaf]] = [(em, 1)]
        pl.rot[local_of[center]] = ring

    crossings: list[tuple[int, int]] = []
    dummies: list[int] = []
    stub_of: dict[Dart, int] = {}

    def can_cross_for(orig: int):
        ends = set(mg.edges[orig])

        def can_cross(owner: object) -> bool:
            other = _owner_origin(cg, owner)
            if other is None or other == orig:
                return False
            if ends & set(mg.edges[other]):
                return False
            return frozenset({orig, other}) not in crossed_pairs

        return can_cross

    def record(orig: int, made: list[tuple[object, int]]) -> None:
        for crossed_owner, dummy in made:
            other = _owner_origin(cg, crossed_owner)
            crossed_pairs.add(frozenset({orig, other}))
            crossings.append((min(orig, other), max(orig, other)))
            dummies.append(dummy)

    if k2:
        # First routed leg is placed by hand so the patch starts connected.
        first_b = route_order[0]
        first = darts[first_b]
        t0 = local_of[_leg_target(mg, cg, first)]
        leg0 = pl.seed_edge(first_b, t0, ("G", first))
        pl.rot[first_b] = [
            (b_edges[first_b], 0),
            (leg0, 0),
            (b_edges[(first_b - 1) % k2], 1),
        ]
        pl.rot[t0].append((leg0, 1))
        pl.verify_planar()
        stub_of[first] = first_b
        for i in route_order[1:]:
            dart = darts[i]
            target = local_of[_leg_target(mg, cg, dart)]
            orig = cg.edge_origin[dart[0]]
            made = _routed(pl, i, target, ("G", dart), can_cross_for(orig))
            record(orig, made)
            stub_of[dart] = i

    for orig in internal_origins:
        x, y = mg.edges[orig]
        made = _routed(
            pl, local_of[x], local_of[y], ("I", orig), can_cross_for(orig)
        )
        record(orig, made)
    pl.verify_planar()
    return _Patch(q, pl, local_of, k2, stub_of, crossings, dummies)


def _glue_patches(
    g: CubicGraph,
    m: PseudoMatching,
    cg: ContractedGraph,
    patches: list[_Patch],
) -> Drawing:
    mg = g.graph
    pl = _Planarizer()
    for _ in range(mg.n):
        pl.new_vertex()

    # Global ids: component vertices keep their graph ids, dummies are fresh.
    global_of: list[dict[int, int]] = []
    for patch in patches:
        mapping = {lv: gv for gv, lv in patch.local_of_gvertex.items()}
        for lv in range(patch.boundary_count, patch.pl.nv):
            if lv not in mapping:
                mapping[lv] = pl.new_vertex()
        global_of.append(mapping)

    # Each quotient edge glues the two stub edges of its darts into one.
    stub_edge: dict[Dart, int] = {}
    stub_inner: dict[Dart, int] = {}
    for patch in patches:
        for dart, b_local in patch.stub_of_dart.items():
            legs = [
                e
                for e in range(len(patch.pl.edges))
                if patch.pl.alive[e]
                and patch.pl.owner[e] == ("G", dart)
                and b_local in patch.pl.edges[e]
            ]
            if len(legs) != 1:
                raise GraphError("stub edge lookup failed")
            stub_edge[dart] = legs[0]
            x, y = patch.pl.edges[legs[0]]
            stub_inner[dart] = y if x == b_local else x

    merged_of_dart: dict[Dart, int] = {}
    for qe in range(cg.graph.m):
        p0, p1 = cg.graph.edges[qe]
        if p0 == p1:
            continue  # quotient loops stay inside their patch
        d0, d1 = (qe, 0), (qe, 1)
        x = global_of[p0][stub_inner[d0]]
        y = global_of[p1][stub_inner[d1]]
        ge = pl.seed_edge(x, y, cg.edge_origin[qe])
        merged_of_dart[d0] = ge
        merged_of_dart[d1] = ge

    edge_global: list[dict[int, int]] = [dict() for _ in patches]
    for pi, patch in enumerate(patches):
        for e in range(len(patch.pl.edges)):
            if not patch.pl.alive[e]:
                continue
            own = patch.pl.owner[e]
            if own == "B":
                continue
            if isinstance(own, tuple) and own[0] == "G" and e == stub_edge[own[1]]:
                edge_global[pi][e] = merged_of_dart[own[1]]
                continue
            a, b = patch.pl.edges[e]
            ga, gb = global_of[pi][a], global_of[pi][b]
            if own[0] in ("M", "I"):
                orig = own[1]
            else:
                orig = cg.edge_origin[own[1][0]]
            edge_global[pi][e] = pl.seed_edge(ga, gb, orig)

    for pi, patch in enumerate(patches):
        for lv in range(patch.boundary_count, patch.pl.nv):
            gv = global_of[pi][lv]
            ring = []
            for e, _s in patch.pl.rot[lv]:
                ge = edge_global[pi][e]
                a, _b = pl.edges[ge]
                ring.append((ge, 0 if a == gv else 1))
            pl.rot[gv] = ring

    crossings: list[tuple[int, int]] = []
    dummies: list[int] = []
    for pi, patch in enumerate(patches):
        for pair, dummy in zip(patch.crossings, patch.crossing_dummies):
            crossings.append(pair)
            dummies.append(global_of[pi][dummy])

    pl.verify_planar()
    return _finish_drawing(g, m, pl, crossings, dummies)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def drawing_to_dot(d: Drawing) -> str:
    """Planarization as DOT; crossing dummies render as squares."""
    dummy = set(d.crossing_dummies)
    lines = ["graph planarization {"]
    for v in range(d.planarized.n):
        shape = "square" if v in dummy else "circle"
        lines.append(f"  {v} [shape={shape}];")
    for a, b in d.planarized.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
