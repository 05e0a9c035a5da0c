"""Ring axioms, exact division, evaluation, and text round-trips."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lambdadet.errors import DivisionByZero, InexactDivision, PoleAtZero
from lambdadet.laurent import (
    LAM,
    ONE,
    ONE_PLUS_LAM,
    T_VAR,
    ZERO,
    LaurentPoly,
    coerce_entry,
    parse_rational,
)

coefficients = st.one_of(
    st.integers(-9, 9),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
)

polys = st.lists(
    st.tuples(coefficients, st.integers(0, 5), st.integers(-4, 4)),
    max_size=6,
).map(LaurentPoly)

nonzero_polys = polys.filter(lambda p: not p.is_zero())

lambda_values = st.one_of(
    st.integers(-4, 4), st.fractions(min_value=-3, max_value=3, max_denominator=4)
)
t_values = lambda_values.filter(lambda v: v != 0)


class TestRingAxioms:
    @given(polys, polys, polys)
    def test_addition_associates_and_commutes(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(polys, polys, polys)
    def test_multiplication_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @given(polys)
    def test_identities(self, a):
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO
        assert a * ZERO == ZERO

    @given(polys, st.integers(0, 4))
    def test_power_matches_repeated_product(self, a, k):
        expected = ONE
        for _ in range(k):
            expected = expected * a
        assert a**k == expected

    @given(polys, polys)
    def test_equal_values_share_hashes(self, a, b):
        if a == b:
            assert hash(a) == hash(b)
        assert a + b == b + a
        assert hash(a + b) == hash(b + a)


class TestDivision:
    @given(polys, nonzero_polys)
    def test_product_division_round_trip(self, a, b):
        assert (a * b).exact_div(b) == a

    def test_inexact_division_is_refused(self):
        with pytest.raises(InexactDivision):
            (ONE + LAM).exact_div(LAM + 2)
        with pytest.raises(InexactDivision):
            (T_VAR + 1).exact_div(T_VAR - 1)

    def test_division_by_zero_is_refused(self):
        with pytest.raises(DivisionByZero):
            ONE.exact_div(ZERO)

    def test_laurent_shifts_divide_exactly(self):
        shifted = LaurentPoly.monomial(Fraction(3, 2), 2, -5)
        assert (ONE_PLUS_LAM * shifted).exact_div(shifted) == ONE_PLUS_LAM
        assert shifted.exact_div(shifted) == ONE

    def test_truediv_operator(self):
        assert (ONE_PLUS_LAM**3) / ONE_PLUS_LAM == ONE_PLUS_LAM**2


class TestEvaluation:
    @given(polys, polys, lambda_values, t_values)
    def test_eval_is_a_ring_homomorphism(self, a, b, l0, t0):
        assert (a * b).eval_at(l0, t0) == a.eval_at(l0, t0) * b.eval_at(l0, t0)
        assert (a + b).eval_at(l0, t0) == a.eval_at(l0, t0) + b.eval_at(l0, t0)

    @given(polys, lambda_values)
    def test_limit_agrees_with_evaluation_at_zero(self, a, l0):
        if a.min_t_exp() < 0:
            with pytest.raises(PoleAtZero):
                a.limit_t0()
            with pytest.raises(PoleAtZero):
                a.eval_at(l0, 0)
        else:
            assert a.limit_t0().eval_at(l0, 1) == a.eval_at(l0, 0)

    def test_limit_drops_positive_powers_only(self):
        poly = ONE + LAM * T_VAR + LaurentPoly.monomial(5, 2, 0)
        assert poly.limit_t0() == ONE + LaurentPoly.monomial(5, 2, 0)

    def test_pole_reports_the_offending_power(self):
        with pytest.raises(PoleAtZero, match="-3"):
            LaurentPoly.monomial(1, 0, -3).limit_t0()


class TestTextForm:
    @given(polys)
    def test_round_trip(self, a):
        assert LaurentPoly.parse(a.to_text()) == a

    def test_canonical_examples(self):
        assert ZERO.to_text() == "0"
        assert ONE.to_text() == "1"
        assert (ONE + LAM).to_text() == "1 + 1*l^1"
        poly = LaurentPoly.monomial(Fraction(-3, 2), 2, -1)
        assert poly.to_text() == "-3/2*l^2*t^-1"
        assert LaurentPoly.parse("-3/2*l^2*t^-1") == poly

    def test_parse_rejects_garbage(self):
        for text in ("", "l^2", "1 +", "2*x^3", "1*l^-1"):
            with pytest.raises(ValueError):
                LaurentPoly.parse(text)

    def test_parse_rational(self):
        assert parse_rational("3") == 3
        assert parse_rational("-2") == -2
        assert parse_rational("3/2") == Fraction(3, 2)

    def test_coerce_entry(self):
        assert coerce_entry(5) == LaurentPoly.const(5)
        assert coerce_entry("1*t^2") == T_VAR**2
        assert coerce_entry(ONE) is ONE
        with pytest.raises(TypeError):
            coerce_entry(1.5)


class TestStructure:
    @given(polys)
    def test_term_count_matches_iteration(self, a):
        assert a.term_count == sum(1 for _ in a.terms())

    def test_exponent_queries(self):
        poly = LAM**2 * T_VAR**3 + LaurentPoly.monomial(1, 0, -2)
        assert poly.min_t_exp() == -2
        assert poly.max_t_exp() == 3
        assert poly.l_degree() == 2
        assert poly.coefficient(2, 3) == 1
        assert poly.coefficient(1, 1) == 0

    def test_as_monomial(self):
        assert (LAM * T_VAR).as_monomial() == (1, 1, 1)
        assert (ONE + LAM).as_monomial() is None
        assert ZERO.as_monomial() is None

    def test_negative_l_exponent_rejected(self):
        with pytest.raises(ValueError):
            LaurentPoly.monomial(1, -1, 0)
