"""Alternating-sign matrices against independent brute-force oracles."""

from __future__ import annotations

import itertools
from fractions import Fraction
from random import Random

import pytest

from lambdadet.asm import (
    ASMStats,
    asm_count_formula,
    asm_stats,
    check_cap,
    complement_cells,
    count_asms,
    enumerate_asms,
    expanded_term_count,
    is_asm,
    lambda_det_sum,
    mask_cells,
    min_region_sum,
    region_sum,
    resolve_cap,
    window_cells,
)
from lambdadet.errors import CapExceeded, DivisionByZero, NonMonomialEntry
from lambdadet.laurent import LAM, ONE_PLUS_LAM, LaurentPoly, T_VAR
from lambdadet.matrices import (
    PolyMatrix,
    center_perturbed,
    diamond_even,
    diamond_odd,
    ones_matrix,
)


def reference_is_asm(rows: tuple[tuple[int, ...], ...]) -> bool:
    """Definition check written independently of the package code."""
    n = len(rows)
    lines = [list(r) for r in rows] + [list(col) for col in zip(*rows)]
    for line in lines:
        running = 0
        for value in line:
            running += value
            if running not in (0, 1):
                return False
        if running != 1:
            return False
    return True


def reference_stats(rows) -> tuple[int, int]:
    """Quadratic-pair inversion count straight from the definition."""
    n = len(rows)
    inversions = 0
    for i, r in itertools.product(range(n), repeat=2):
        if i >= r:
            continue
        for j, s in itertools.product(range(n), repeat=2):
            if j > s:
                inversions += rows[i][j] * rows[r][s]
    negatives = sum(1 for row in rows for value in row if value == -1)
    return inversions, negatives


class TestEnumeration:
    def test_counts_match_closed_form(self):
        expected = [1, 2, 7, 42, 429, 7436, 218348]
        assert [count_asms(n) for n in range(1, 8)] == expected
        assert [asm_count_formula(n) for n in range(1, 8)] == expected

    def test_size_three_against_exhaustive_scan(self):
        brute = {
            rows
            for rows in itertools.product(
                itertools.product((-1, 0, 1), repeat=3), repeat=3
            )
            if reference_is_asm(rows)
        }
        assert set(enumerate_asms(3)) == brute

    def test_size_four_against_row_product_scan(self):
        rows4 = [
            row
            for row in itertools.product((-1, 0, 1), repeat=4)
            if all(sum(row[: k + 1]) in (0, 1) for k in range(4))
            and sum(row) == 1
        ]
        assert len(rows4) == 8
        brute = {
            candidate
            for candidate in itertools.product(rows4, repeat=4)
            if reference_is_asm(candidate)
        }
        assert set(enumerate_asms(4)) == brute

    def test_every_generated_matrix_satisfies_the_definition(self):
        for n in (1, 2, 3, 4, 5):
            for asm in enumerate_asms(n):
                assert is_asm(asm)

    def test_is_asm_rejects_near_misses(self):
        assert not is_asm(((1, 1), (0, 0)))
        assert not is_asm(((1, -1), (0, 1)))
        assert not is_asm(((2, -1), (-1, 2)))
        assert not is_asm(((1, 0), (0,)))
        assert not is_asm(((0, 1), (1, -1)))

    def test_cap_enforcement_and_override(self, monkeypatch):
        with pytest.raises(CapExceeded, match="LAMBDADET_CAP"):
            count_asms(8)
        assert count_asms(2, cap=3) == 2
        monkeypatch.setenv("LAMBDADET_CAP", "9")
        assert resolve_cap() == 9
        check_cap(8)
        monkeypatch.setenv("LAMBDADET_CAP", "4")
        with pytest.raises(CapExceeded):
            check_cap(5)
        assert resolve_cap(7) == 7


class TestStats:
    def test_against_definition_for_small_sizes(self):
        for n in (1, 2, 3, 4):
            for asm in enumerate_asms(n):
                stats = asm_stats(asm)
                assert (stats.inversions, stats.negatives) == reference_stats(asm)
                assert stats.plus_exponent >= 0

    def test_sampled_size_five(self):
        rng = Random(5)
        sample = [asm for asm in enumerate_asms(5) if rng.random() < 0.1]
        assert sample
        for asm in sample:
            stats = asm_stats(asm)
            assert (stats.inversions, stats.negatives) == reference_stats(asm)

    def test_permutation_matrices_reduce_to_inversions(self):
        for perm in itertools.permutations(range(4)):
            rows = tuple(
                tuple(1 if j == perm[i] else 0 for j in range(4)) for i in range(4)
            )
            inversions = sum(
                1
                for a, b in itertools.combinations(range(4), 2)
                if perm[a] > perm[b]
            )
            assert asm_stats(rows) == ASMStats(inversions, 0)

    def test_center_minus_example(self):
        stats = asm_stats(((0, 1, 0), (1, -1, 1), (0, 1, 0)))
        assert (stats.inversions, stats.negatives, stats.plus_exponent) == (2, 1, 1)


class TestSummationFormula:
    def test_all_ones_closed_form(self):
        for n in range(1, 6):
            assert lambda_det_sum(ones_matrix(n)) == ONE_PLUS_LAM ** (
                n * (n - 1) // 2
            )

    def test_center_perturbed_family(self):
        for c in (1, 2, 3):
            det = lambda_det_sum(center_perturbed(c))
            expected = LaurentPoly(
                [
                    (c, 1, 0),
                    (c, 2, 0),
                    (2, 1, 3),
                    (2, 2, 3),
                    (Fraction(1, c), 0, 6),
                    (Fraction(1, c), 3, 6),
                ]
            )
            assert det == expected
            assert det.limit_t0() == LaurentPoly([(c, 1, 0), (c, 2, 0)])

    def test_two_by_two_is_the_generalized_determinant(self):
        matrix = PolyMatrix.from_rows([[2, 3], [5, 7]])
        assert lambda_det_sum(matrix) == LaurentPoly.const(14) + LAM * 15

    def test_expanded_term_counts(self):
        for m in range(1, 6):
            assert expanded_term_count(m) == 2 ** (m * (m - 1) // 2)

    def test_negative_exponent_needs_invertible_entries(self):
        with_zero_center = PolyMatrix.from_rows(
            [[1, 1, 1], [1, 0, 1], [1, 1, 1]]
        )
        with pytest.raises(DivisionByZero):
            lambda_det_sum(with_zero_center)
        with_sum_center = PolyMatrix.from_rows(
            [[1, 1, 1], [1, "1 + 1*t^1", 1], [1, 1, 1]]
        )
        with pytest.raises(NonMonomialEntry):
            lambda_det_sum(with_sum_center)
        with_l_center = PolyMatrix.from_rows(
            [[1, 1, 1], [1, "1*l^1", 1], [1, 1, 1]]
        )
        with pytest.raises(NonMonomialEntry):
            lambda_det_sum(with_l_center)

    def test_t_monomial_entries_stay_exact(self):
        matrix = PolyMatrix.from_rows(
            [["1*t^1"] * 3, ["1*t^1", "1*t^2", "1*t^1"], ["1*t^1"] * 3]
        )
        det = lambda_det_sum(matrix)
        assert det.min_t_exp() >= 0
        assert det.eval_at(1, 1) == 8


class TestRegionSums:
    def test_cell_helpers(self):
        pattern = diamond_odd(1)
        mask = mask_cells(pattern)
        holes = complement_cells(pattern)
        assert mask == {(1, 2), (2, 1), (2, 2), (2, 3), (3, 2)}
        assert holes == {(1, 1), (1, 3), (3, 1), (3, 3)}
        assert window_cells(mask, 1, 1, 2) == {(1, 2), (2, 1), (2, 2)}

    def test_minima_for_small_diamonds(self):
        cases = [
            (2, mask_cells(diamond_even(1)), 2),
            (4, mask_cells(diamond_even(2)), 2),
            (4, complement_cells(diamond_even(2)), 0),
            (3, mask_cells(diamond_odd(1)), 1),
            (5, mask_cells(diamond_odd(2)), 1),
            (5, complement_cells(diamond_odd(2)), 0),
        ]
        for size, cells, expected in cases:
            value, minimizer = min_region_sum(size, cells)
            assert value == expected
            assert is_asm(minimizer)
            assert region_sum(minimizer, cells) == expected

    def test_size_seven_diamond_sum_goes_negative(self):
        """The odd diamond pattern admits a negative partial sum at size 7.

        This pins the smallest counterexample to the folklore claim that
        diamond-masked partial sums of alternating-sign matrices are
        always non-negative: true for odd sizes 3 and 5 (and even sizes
        through 8), false from size 7 on.
        """
        witness = (
            (0, 0, 0, 0, 1, 0, 0),
            (0, 1, 0, 0, -1, 1, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 1, 0, 0, 0),
            (1, -1, 1, 0, 0, -1, 1),
            (0, 1, 0, 0, -1, 1, 0),
            (0, 0, 0, 0, 1, 0, 0),
        )
        assert is_asm(witness)
        assert reference_is_asm(witness)
        mask = mask_cells(diamond_odd(3))
        assert region_sum(witness, mask) == -1
        assert region_sum(witness, complement_cells(diamond_odd(3))) == 8
