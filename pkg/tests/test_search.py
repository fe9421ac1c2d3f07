"""Solvers checked against enumeration oracles and their frozen values."""

from fractions import Fraction

import pytest

from patternex import (
    CapacityError,
    ExtremalTable,
    InputError,
    PostconditionError,
    TableRow,
    corner_pad,
    count_avoiders,
    estimate_limit,
    ex_matrix,
    exe_hyper,
    exi_hyper,
    f_multi,
    gex_graph,
    hypergraph_contains,
    make_hypergraph,
    make_matrix,
    matrix_contains,
    permutation_matrix,
    table_to_csv,
)

from oracles import (
    all_matrices,
    brute_count_avoiders,
    brute_gex,
    brute_hyper_extremal,
    brute_max_weight,
)

IDENTITY2 = permutation_matrix((1, 2))
ALL_ONES_2 = make_matrix([2, 2], [(1, 1), (1, 2), (2, 1), (2, 2)])
SINGLE_EDGE = make_hypergraph(2, [(1, 2)])
IDENTITY_HYPERGRAPH = make_hypergraph(4, [(1, 3), (2, 4)])


class TestExMatrix:
    def test_single_entry_pattern_forces_zero(self):
        single = make_matrix([1, 1], [(1, 1)])
        for n in (1, 2, 3):
            assert ex_matrix(single, n).value == 0

    def test_identity_n4(self):
        assert ex_matrix(IDENTITY2, 4).value == 7

    def test_identity_n4_against_full_enumeration(self):
        # 2^16 hosts; the largest size the brute oracle can cover directly
        assert brute_max_weight(IDENTITY2, (4, 4)) == 7

    def test_all_ones_n3(self):
        assert ex_matrix(ALL_ONES_2, 3).value == 6

    def test_weight_zero_is_an_error(self):
        with pytest.raises(InputError):
            ex_matrix(make_matrix([2, 2], []), 3)

    def test_oversized_pattern_gives_full_matrix(self):
        big = make_matrix([4, 4], [(4, 1)])
        cert = ex_matrix(big, 2)
        assert cert.value == 4

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            ex_matrix(IDENTITY2, 9)

    def test_certificate_is_verified(self):
        cert = ex_matrix(IDENTITY2, 3)
        assert cert.verified
        assert cert.witness.weight == cert.value
        assert matrix_contains(cert.witness, IDENTITY2) is None

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_oracle_equivalence_weight_le_3(self, n):
        # all 2x2 and a few ragged patterns of weight <= 3
        patterns = [
            m
            for extents in [(2, 2), (1, 3), (3, 2)]
            for m in all_matrices(extents)
            if 1 <= m.weight <= 3
        ]
        for pattern in patterns:
            square = make_matrix(
                (pattern.extents[0], pattern.extents[1]), pattern.sorted_ones()
            )
            assert ex_matrix(square, n).value == brute_max_weight(square, (n, n))

    def test_monotone_in_n(self):
        values = [ex_matrix(IDENTITY2, n).value for n in range(1, 6)]
        assert values == sorted(values)

    def test_superpattern_has_larger_value(self):
        padded = corner_pad(IDENTITY2)
        for n in range(1, 5):
            assert ex_matrix(padded, n).value >= ex_matrix(IDENTITY2, n).value

    def test_deterministic_witness(self):
        a = ex_matrix(IDENTITY2, 4)
        b = ex_matrix(IDENTITY2, 4)
        assert a == b


class TestFMulti:
    def test_single_entry_3d(self):
        single = make_matrix([1, 1, 1], [(1, 1, 1)])
        assert f_multi(single, 3, 2).value == 0

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            f_multi(IDENTITY2, 3, 2)

    def test_reduces_to_ex_matrix_for_d2(self):
        # independent engines must agree on value and canonical witness
        for pattern in (IDENTITY2, ALL_ONES_2, make_matrix([2, 2], [(1, 2), (2, 1)])):
            for n in (1, 2, 3):
                via_f = f_multi(pattern, 2, n)
                via_ex = ex_matrix(pattern, n)
                assert via_f.value == via_ex.value
                assert via_f.witness == via_ex.witness

    def test_diagonal_3d_side2(self):
        diag = make_matrix([2, 2, 2], [(1, 1, 1), (2, 2, 2)])
        value = f_multi(diag, 3, 2).value
        assert value == brute_max_weight(diag, (2, 2, 2)) == 7


class TestGexGraph:
    def test_single_edge_pattern(self):
        for n in (1, 2, 3, 4):
            assert gex_graph(SINGLE_EDGE, n).value == 0

    def test_path_pattern_n3(self):
        path = make_hypergraph(3, [(1, 2), (2, 3)])
        value = gex_graph(path, 3).value
        assert value == brute_gex(path, 3) == 2

    def test_requires_two_uniform(self):
        with pytest.raises(InputError):
            gex_graph(make_hypergraph(3, [(1, 2, 3)]), 3)

    def test_edgeless_pattern_rejected_when_it_fits(self):
        with pytest.raises(InputError):
            gex_graph(make_hypergraph(2, []), 3)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            gex_graph(SINGLE_EDGE, 9)

    def test_oracle_equivalence_small(self):
        patterns = [
            make_hypergraph(3, [(1, 2)]),
            make_hypergraph(3, [(1, 3), (2, 3)]),
            make_hypergraph(4, [(1, 3), (2, 4)]),
        ]
        for pattern in patterns:
            for n in (1, 2, 3, 4):
                expected = brute_gex(pattern, n)
                if expected is None:
                    with pytest.raises(InputError):
                        gex_graph(pattern, n)
                else:
                    cert = gex_graph(pattern, n)
                    assert cert.value == expected
                    assert hypergraph_contains(cert.witness, pattern) is None


class TestHyperExtremal:
    def test_single_edge_pattern_keeps_singletons(self):
        for n in (1, 2, 3):
            assert exe_hyper(SINGLE_EDGE, n).value == n
            assert exi_hyper(SINGLE_EDGE, n).value == n

    def test_singleton_pattern_forces_empty(self):
        pattern = make_hypergraph(1, [(1,)])
        assert exe_hyper(pattern, 3).value == 0
        assert exi_hyper(pattern, 3).value == 0

    def test_identity_hypergraph_n3(self):
        # the pattern needs 4 vertices, so every host on [3] avoids it
        assert exe_hyper(IDENTITY_HYPERGRAPH, 3).value == 7
        assert exi_hyper(IDENTITY_HYPERGRAPH, 3).value == 12
        assert brute_hyper_extremal(IDENTITY_HYPERGRAPH, 3, "edges") == 7
        assert brute_hyper_extremal(IDENTITY_HYPERGRAPH, 3, "weight") == 12

    def test_oracle_equivalence_with_cap(self):
        for pattern in (SINGLE_EDGE, IDENTITY_HYPERGRAPH, make_hypergraph(2, [(1,), (1, 2)])):
            cap = max(pattern.n, 1)
            for n in (1, 2, 3):
                assert exe_hyper(pattern, n).value == brute_hyper_extremal(
                    pattern, n, "edges", cap
                )
                assert exi_hyper(pattern, n).value == brute_hyper_extremal(
                    pattern, n, "weight", cap
                )

    def test_exact_flag_lifts_the_cap(self):
        # nested pattern: a long edge is the best capped-out avoider
        pattern = make_hypergraph(2, [(1,), (1, 2)])
        capped = exi_hyper(pattern, 4).value
        exact = exi_hyper(pattern, 4, exact=True).value
        assert exact == brute_hyper_extremal(pattern, 4, "weight")
        assert exact >= capped

    def test_capacity(self):
        with pytest.raises(CapacityError):
            exe_hyper(IDENTITY_HYPERGRAPH, 6)


class TestCountAvoiders:
    def test_single_edge_powers_of_two(self):
        assert [count_avoiders(SINGLE_EDGE, n) for n in (1, 2, 3, 4)] == [2, 4, 8, 16]

    def test_pattern_with_singleton_edge(self):
        pattern = make_hypergraph(2, [(1,), (1, 2)])
        # any host with an edge contains the singleton part of the pattern
        assert count_avoiders(make_hypergraph(1, [(1,)]), 3) == 1

    def test_identity_hypergraph_n3(self):
        assert count_avoiders(IDENTITY_HYPERGRAPH, 3) == 128

    def test_oracle_equivalence(self):
        for pattern in (
            SINGLE_EDGE,
            make_hypergraph(1, [(1,)]),
            make_hypergraph(3, [(1, 2), (2, 3)]),
            make_hypergraph(2, [(1,), (1, 2)]),
        ):
            for n in (0, 1, 2, 3):
                assert count_avoiders(pattern, n) == brute_count_avoiders(pattern, n)

    def test_capacity_without_cap(self):
        with pytest.raises(CapacityError):
            count_avoiders(SINGLE_EDGE, 5)

    def test_cap_allows_larger_n(self):
        # avoiders of the single edge are exactly the singleton subsets
        assert count_avoiders(SINGLE_EDGE, 5, edge_size_cap=1) == 2**5


class TestTables:
    def _identity_table(self):
        rows = tuple(
            TableRow(n, ex_matrix(IDENTITY2, n).value, f"w{n}.txt") for n in (1, 2, 3, 4, 5)
        )
        return ExtremalTable("identity2", "ex", 2, rows)

    def test_limit_estimate(self):
        table = self._identity_table()
        assert estimate_limit(table) == Fraction(9, 5)
        assert table.limit_estimate == Fraction(9, 5)
        single = ExtremalTable(
            "single", "ex", 2, (TableRow(1, 0), TableRow(2, 0), TableRow(3, 0))
        )
        assert estimate_limit(single) == 0

    def test_ratio_monotone_reported(self):
        assert self._identity_table().ratios_monotone()

    def test_rows_must_be_sorted(self):
        with pytest.raises(PostconditionError):
            ExtremalTable("x", "ex", 2, (TableRow(2, 3), TableRow(1, 1)))

    def test_values_must_not_decrease(self):
        with pytest.raises(PostconditionError):
            ExtremalTable("x", "ex", 2, (TableRow(1, 3), TableRow(2, 1)))

    def test_csv_shape(self):
        text = table_to_csv(self._identity_table())
        lines = text.strip().split("\n")
        assert lines[0] == "n,value,ratio,witness_file"
        assert lines[1] == "1,1,1,w1.txt"
        assert lines[5] == "5,9,9/5,w5.txt"
