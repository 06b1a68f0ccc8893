"""Family constructors and their designated pseudo-matchings."""

from __future__ import annotations

import pytest

import named
from snarkppm import (
    GraphError,
    PLANARIZING,
    are_isomorphic,
    blanusa_snark,
    classify_ppm,
    complement_cycles,
    find_3_edge_coloring,
    flower_graph,
    flower_snark,
    goldberg_snark,
    is_snark,
    petersen,
    validate_ppm,
)


class TestPetersen:
    def test_matches_standard_petersen(self):
        assert are_isomorphic(petersen().graph.graph, named.petersen_standard())

    def test_is_snark(self):
        assert is_snark(petersen().graph)

    def test_ppm_shape(self):
        m = petersen().designated_ppm
        assert m.claw_count() == 1
        assert len(m.components) == 4

    def test_complement_is_single_9_cycle(self):
        inst = petersen()
        cycles = complement_cycles(inst.graph, inst.designated_ppm)
        assert [len(c) for c in cycles] == [9]


class TestBlanusa:
    def test_b11_is_petersen(self):
        inst = blanusa_snark(1, 1)
        assert are_isomorphic(inst.graph.graph, named.petersen_standard())

    def test_b12_is_a_snark_of_order_18(self):
        inst = blanusa_snark(2, 1)
        assert inst.graph.n == 18
        assert is_snark(inst.graph)

    def test_orders(self):
        for n in (1, 2, 3):
            for j in (1, 2):
                inst = blanusa_snark(n, j)
                assert inst.graph.n == 8 * (n - 1) + 10
                assert validate_ppm(inst.graph, inst.designated_ppm) is None

    def test_m2_planarizing_for_b22(self):
        inst = blanusa_snark(2, 2)
        assert classify_ppm(inst.graph, inst.designated_ppm) == PLANARIZING

    def test_designated_ppms_planarizing_small(self):
        for n in (1, 2, 3):
            for j in (1, 2):
                if (n, j) == (1, 2):
                    continue  # degenerate, see below
                inst = blanusa_snark(n, j)
                assert classify_ppm(inst.graph, inst.designated_ppm) == PLANARIZING

    def test_degenerate_b12_cannot_planarize(self):
        # With no B0 copy, M_2 has no claw: it is a perfect matching of a
        # 10-vertex snark, i.e. of the Petersen graph, and the order-10 row
        # of the census says no perfect matching of it planarizes.
        inst = blanusa_snark(1, 2)
        assert are_isomorphic(inst.graph.graph, named.petersen_standard())
        assert inst.designated_ppm.is_perfect_matching()
        assert classify_ppm(inst.graph, inst.designated_ppm) == "neither"

    def test_blanusa_snarks_are_snarks(self):
        for n in (1, 2):
            for j in (1, 2):
                assert is_snark(blanusa_snark(n, j).graph)

    def test_parameter_errors(self):
        with pytest.raises(GraphError):
            blanusa_snark(0, 1)
        with pytest.raises(GraphError):
            blanusa_snark(1, 3)


class TestFlower:
    def test_sizes_and_validity(self):
        for k in (3, 5, 7, 9):
            inst = flower_snark(k)
            assert inst.graph.n == 4 * k
            assert validate_ppm(inst.graph, inst.designated_ppm) is None
            assert inst.designated_ppm.claw_count() == k

    def test_j5_j7_are_snarks(self):
        assert is_snark(flower_snark(5).graph)
        assert is_snark(flower_snark(7).graph)

    def test_odd_flowers_uncolorable_even_colorable(self):
        for k in (5, 7, 9):
            from snarkppm import CubicGraph

            assert find_3_edge_coloring(CubicGraph(flower_graph(k))) is None
        for k in (4, 6):
            from snarkppm import CubicGraph

            assert find_3_edge_coloring(CubicGraph(flower_graph(k))) is not None

    def test_claw_ppm_planarizing(self):
        for k in (3, 5, 7, 9):
            inst = flower_snark(k)
            assert classify_ppm(inst.graph, inst.designated_ppm) == PLANARIZING

    def test_parameter_errors(self):
        with pytest.raises(GraphError):
            flower_snark(4)
        with pytest.raises(GraphError):
            flower_snark(1)


class TestGoldberg:
    def test_g5_shape(self):
        inst = goldberg_snark(5)
        assert inst.graph.n == 40
        assert inst.designated_ppm.is_perfect_matching()
        assert len(inst.designated_ppm.components) == 20

    def test_g5_is_snark(self):
        assert is_snark(goldberg_snark(5).graph)

    def test_matching_planarizing(self):
        for k in (5, 7, 9):
            inst = goldberg_snark(k)
            assert classify_ppm(inst.graph, inst.designated_ppm) == PLANARIZING

    def test_parameter_errors(self):
        with pytest.raises(GraphError):
            goldberg_snark(4)
        with pytest.raises(GraphError):
            goldberg_snark(3)
