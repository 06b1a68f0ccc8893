"""Combinatorial embeddings: rotation systems, darts, face tracing.

A dart is ``(edge_id, end)`` with ``end`` in {0, 1}: dart ``(e, 0)`` leaves
``edges[e][0]`` toward ``edges[e][1]``, dart ``(e, 1)`` is the reverse.
``rotation[v]`` lists the darts with tail ``v`` in clockwise order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import GraphError, Multigraph

Dart = tuple[int, int]


def dart_tail(g: Multigraph, d: Dart) -> int:
    e, s = d
    return g.edges[e][s]


def dart_head(g: Multigraph, d: Dart) -> int:
    e, s = d
    return g.edges[e][1 - s]


def twin(d: Dart) -> Dart:
    return (d[0], 1 - d[1])


@dataclass
class PlanarEmbedding:
    """Rotation system describing a genus-0 embedding of a multigraph."""

    graph: Multigraph
    rotation: dict[int, list[Dart]]

    def faces(self) -> list[list[Dart]]:
        """Orbits of the face-successor permutation (one walk per face)."""
        succ = self._face_successor()
        seen: set[Dart] = set()
        out: list[list[Dart]] = []
        for start in sorted(succ):
            if start in seen:
                continue
            walk = []
            d = start
            while d not in seen:
                seen.add(d)
                walk.append(d)
                d = succ[d]
            out.append(walk)
        return out

    def face_count(self) -> int:
        return len(self.faces())

    def verify_euler(self) -> None:
        """Check v - e + f = 2 on every connected component with an edge."""
        g = self.graph
        self._verify_rotation_complete()
        comps = g.connected_components()
        comp_of = {}
        for ci, verts in enumerate(comps):
            for v in verts:
                comp_of[v] = ci
        face_per_comp = [0] * len(comps)
        for walk in self.faces():
            face_per_comp[comp_of[dart_tail(g, walk[0])]] += 1
        edge_per_comp = [0] * len(comps)
        for a, _b in g.edges:
            edge_per_comp[comp_of[a]] += 1
        for ci, verts in enumerate(comps):
            v, e, f = len(verts), edge_per_comp[ci], face_per_comp[ci]
            if e == 0:
                continue
            if v - e + f != 2:
                raise GraphError(
                    f"embedding violates Euler formula on component {ci}: "
                    f"v={v} e={e} f={f}"
                )

    def _face_successor(self) -> dict[Dart, Dart]:
        g = self.graph
        pos: dict[Dart, tuple[int, int]] = {}
        for v, darts in self.rotation.items():
            for i, d in enumerate(darts):
                if dart_tail(g, d) != v:
                    raise GraphError(f"dart {d} listed at vertex {v} but has tail elsewhere")
                pos[d] = (v, i)
        succ: dict[Dart, Dart] = {}
        for d in pos:
            t = twin(d)
            v, i = pos[t]
            ring = self.rotation[v]
            succ[d] = ring[(i + 1) % len(ring)]
        return succ

    def _verify_rotation_complete(self) -> None:
        g = self.graph
        want: dict[int, int] = {v: 0 for v in range(g.n)}
        for e, (a, b) in enumerate(g.edges):
            want[a] += 1
            want[b] += 1
        seen_darts: set[Dart] = set()
        for v in range(g.n):
            darts = self.rotation.get(v, [])
            for d in darts:
                if d in seen_darts:
                    raise GraphError(f"dart {d} appears twice in rotation")
                seen_darts.add(d)
        if len(seen_darts) != 2 * g.m:
            raise GraphError(
                f"rotation lists {len(seen_darts)} darts, expected {2 * g.m}"
            )
