"""Planarity (with embeddings) and K5-minor detection vs brute-force oracles."""

from __future__ import annotations

import random

import pytest

import named
import oracles
from snarkppm import (
    GraphError,
    Multigraph,
    contract,
    flower_snark,
    has_k5_minor,
    is_planar,
)
from snarkppm.minors import KMinorUndecidedError


class TestPlanarity:
    def test_k4_has_four_faces(self):
        emb = is_planar(named.k4())
        assert emb is not None
        assert emb.face_count() == 4

    def test_k5_and_k33_are_not_planar(self):
        assert is_planar(named.k5()) is None
        assert is_planar(named.k33()) is None

    def test_petersen_not_planar(self):
        assert is_planar(named.petersen_standard()) is None

    def test_flower_quotient_three_parallel_cycles_planar(self):
        inst = flower_snark(5)
        cg = contract(inst.graph, inst.designated_ppm)
        emb = is_planar(cg.graph)
        assert emb is not None
        emb.verify_euler()

    def test_loops_and_parallels_embed(self):
        g = Multigraph(3, [(0, 1), (0, 1), (0, 1), (1, 2), (2, 2), (0, 2)])
        emb = is_planar(g)
        assert emb is not None
        emb.verify_euler()
        # Each parallel mate adds a face, each loop adds a face:
        # v=3 e=6 -> f = 2 - 3 + 6 = 5.
        assert emb.face_count() == 5

    def test_disconnected(self):
        g = Multigraph(8, [(0, 1), (1, 2), (2, 0), (4, 5), (5, 6), (6, 4)])
        emb = is_planar(g)
        assert emb is not None
        emb.verify_euler()

    def test_exhaustive_small_graphs_vs_wagner_oracle(self, connected_graphs_le8):
        # n = 8 runs once more in the acceptance module (criterion 6).
        checked = 0
        for n in range(1, 8):
            for g in connected_graphs_le8[n]:
                expect = oracles.brute_is_planar(g)
                emb = is_planar(g)
                assert (emb is not None) == expect, f"disagree on {g.edges}"
                if emb is not None:
                    emb.verify_euler()
                checked += 1
        assert checked == 996

    def test_random_multigraphs_vs_oracle(self):
        rng = random.Random(2024)
        for _ in range(500):
            n = rng.randint(1, 10)
            m = rng.randint(0, 2 * n)
            edges = []
            for _e in range(m):
                a = rng.randrange(n)
                b = rng.randrange(n)
                edges.append((a, b))
            g = Multigraph(n, edges)
            expect = oracles.brute_is_planar(g)
            emb = is_planar(g)
            assert (emb is not None) == expect, f"disagree on n={n} {edges}"
            if emb is not None:
                emb.verify_euler()

    def test_networkx_cross_check_on_random_graphs(self):
        nx = pytest.importorskip("networkx")
        rng = random.Random(99)
        for _ in range(300):
            n = rng.randint(3, 16)
            edges = set()
            for _e in range(rng.randint(n, 3 * n)):
                a, b = rng.randrange(n), rng.randrange(n)
                if a != b:
                    edges.add((min(a, b), max(a, b)))
            g = Multigraph(n, sorted(edges))
            gx = nx.Graph()
            gx.add_nodes_from(range(n))
            gx.add_edges_from(g.edges)
            assert (is_planar(g) is not None) == nx.check_planarity(gx)[0]


class TestK5Minor:
    def test_k5_itself(self):
        assert has_k5_minor(named.k5())

    def test_petersen_contains_k5_minor(self):
        g = named.petersen_standard()
        assert oracles.brute_has_k5_minor(g)
        assert has_k5_minor(g)

    def test_planar_graphs_have_none(self):
        for g in (named.k4(), named.prism(), named.cube()):
            assert not has_k5_minor(g)

    def test_exhaustive_small_graphs_vs_partition_oracle(self, connected_graphs_le8):
        # n = 8 runs once more in the acceptance module (criterion 6).
        for n in range(1, 8):
            for g in connected_graphs_le8[n]:
                assert has_k5_minor(g) == oracles.brute_has_k5_minor(g), g.edges

    def test_planar_implies_no_k5_minor_on_corpus(self, connected_graphs_le8):
        for g in connected_graphs_le8[7]:
            if is_planar(g) is not None:
                assert not has_k5_minor(g)

    def test_budget_raises_undecided(self):
        with pytest.raises(KMinorUndecidedError):
            has_k5_minor(named.petersen_standard(), node_budget=3)

    def test_parallel_edges_ignored(self):
        g = Multigraph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
        doubled = Multigraph(5, list(g.edges) + list(g.edges))
        assert has_k5_minor(doubled)
