from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpartition import (
    CyclotomicFactorization,
    DomainError,
    Polynomial,
    cyclotomic_normalized,
    factor_denominator,
    format_polynomial,
    partial_fractions,
    poly_xgcd,
    series_expand,
    series_of_ratio,
)

ONE = Polynomial.one()


def P(*coeffs):
    return Polynomial(coeffs)


class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        assert P(1, 2, 0, 0).coeffs == (F(1), F(2))
        assert P(0, 0).is_zero()
        assert P().degree == -1

    def test_arithmetic(self):
        a, b = P(1, 2), P(3, 0, 1)
        assert a + b == P(4, 2, 1)
        assert a - a == P()
        assert a * b == P(3, 6, 1, 2)
        assert (a * b) // b == a
        assert P(1, 1) ** 3 == P(1, 3, 3, 1)

    def test_divmod(self):
        q, r = divmod(P(-1, 0, 1), P(1, 1))
        assert q == P(-1, 1) and r.is_zero()
        q, r = divmod(P(1, 1, 1), P(0, 1))
        assert q == P(1, 1) and r == P(1)
        with pytest.raises(DomainError):
            divmod(P(1), P())

    def test_eval_horner(self):
        p = P(F(1, 2), 0, 1)
        assert p(3) == F(19, 2)
        assert p(F(1, 2)) == F(3, 4)

    def test_format(self):
        assert format_polynomial(P(F(-5, 32), F(-1, 32))) == "-n/32 - 5/32"
        assert format_polynomial(P(F(175, 288), F(15, 32), F(5, 48), F(1, 144))) == (
            "n^3/144 + 5*n^2/48 + 15*n/32 + 175/288"
        )
        assert format_polynomial(P()) == "0"
        assert format_polynomial(P(3)) == "3"
        assert format_polynomial(P(0, -2)) == "-2*n"


class TestSeriesExpand:
    def test_parts_1234(self):
        s = series_expand(ONE, [1, 2, 3, 4], 6)
        assert list(s) == [1, 1, 2, 3, 5, 6, 9]

    def test_geometric(self):
        assert list(series_expand(ONE, [1], 3)) == [1, 1, 1, 1]

    def test_repeated_part(self):
        # q/(1-q)^2 has coefficient n
        assert list(series_expand(P(0, 1), [1, 1], 4)) == [0, 1, 2, 3, 4]

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            series_expand(ONE, [], 3)
        with pytest.raises(DomainError):
            series_expand(ONE, [0, 1], 3)
        with pytest.raises(DomainError):
            series_expand(ONE, [1], -1)

    @given(
        parts=st.lists(st.integers(1, 6), min_size=1, max_size=4),
        order=st.integers(0, 25),
    )
    @settings(max_examples=60, deadline=None)
    def test_matches_truncated_product_of_geometric_series(self, parts, order):
        # Independent route: multiply the truncated geometric series directly.
        expected = [F(1)] + [F(0)] * order
        for s in parts:
            geo = Polynomial([1 if i % s == 0 else 0 for i in range(order + 1)])
            expected = (Polynomial(expected) * geo).coeffs[: order + 1]
            expected = list(expected) + [F(0)] * (order + 1 - len(expected))
        got = list(series_expand(ONE, parts, order))
        assert got == expected

    @given(
        parts=st.lists(st.integers(1, 8), min_size=1, max_size=5),
        order=st.integers(0, 40),
    )
    @settings(max_examples=40, deadline=None)
    def test_counts_are_nonnegative_integers(self, parts, order):
        for c in series_expand(ONE, parts, order):
            assert c.denominator == 1 and c >= 0


class TestSeriesOfRatio:
    def test_simple_ratio(self):
        s = series_of_ratio(ONE, P(1, -1), 5)
        assert list(s) == [1] * 6

    def test_matches_multiplication(self):
        num, den = P(1, 2, 3), P(2, 0, 1, 5)
        s = series_of_ratio(num, den, 12)
        back = Polynomial(s.coeffs) * den
        assert back.coeffs[:13] == num.coeffs + (F(0),) * (13 - len(num.coeffs))

    def test_rejects_zero_constant_term(self):
        with pytest.raises(DomainError):
            series_of_ratio(ONE, P(0, 1), 3)


class TestCyclotomic:
    def test_small_cases(self):
        assert cyclotomic_normalized(1) == P(1, -1)
        assert cyclotomic_normalized(2) == P(1, 1)
        assert cyclotomic_normalized(3) == P(1, 1, 1)
        assert cyclotomic_normalized(6) == P(1, -1, 1)

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            cyclotomic_normalized(0)

    def test_product_identity_up_to_200(self):
        for s in range(1, 201):
            product = Polynomial.one()
            for d in range(1, s + 1):
                if s % d == 0:
                    product = product * cyclotomic_normalized(d)
            assert product == Polynomial((1,) + (0,) * (s - 1) + (-1,)), s


class TestFactorDenominator:
    def test_examples(self):
        assert factor_denominator([1, 2, 3, 4]).multiplicities == {1: 4, 2: 2, 3: 1, 4: 1}
        assert factor_denominator([1]).multiplicities == {1: 1}
        assert factor_denominator([1, 1, 2, 2]).multiplicities == {1: 4, 2: 2}

    def test_rejects_empty(self):
        with pytest.raises(DomainError):
            factor_denominator([])

    @given(parts=st.lists(st.integers(1, 9), min_size=1, max_size=5))
    @settings(max_examples=60, deadline=None)
    def test_product_reconstruction(self, parts):
        fact = factor_denominator(parts)
        expected = Polynomial.one()
        for s in parts:
            expected = expected * Polynomial((1,) + (0,) * (s - 1) + (-1,))
        assert fact.denominator() == expected


class TestPolyXgcd:
    def test_common_factor(self):
        g, u, v = poly_xgcd(P(1, 0, -1), P(1, -1))
        assert g == P(-1, 1)  # monic: q - 1
        assert u * P(1, 0, -1) + v * P(1, -1) == g

    def test_coprime_cyclotomics(self):
        a, b = cyclotomic_normalized(2), cyclotomic_normalized(3)
        g, u, v = poly_xgcd(a, b)
        assert g == ONE
        assert u * a + v * b == ONE

    def test_gcd_with_zero(self):
        g, u, v = poly_xgcd(P(2, 4), P())
        assert g == P(F(1, 2), 1)
        assert u == P(F(1, 4)) and v.is_zero()

    def test_rejects_both_zero(self):
        with pytest.raises(DomainError):
            poly_xgcd(P(), P())


class TestPartialFractions:
    def test_worked_example_parts_1234(self):
        fact = factor_denominator([1, 2, 3, 4])
        pfd = partial_fractions(ONE, fact)
        got = {(t.period, t.power): t.numerator for t in pfd.terms}
        assert got == {
            (1, 1): P(F(17, 72)),
            (1, 2): P(F(59, 288)),
            (1, 3): P(F(1, 8)),
            (1, 4): P(F(1, 24)),
            (2, 1): P(F(1, 8)),
            (2, 2): P(F(1, 32)),
            (3, 1): P(F(1, 9), F(1, 9)),
            (4, 1): P(F(1, 8)),  # required by the identity; see reconstruction
        }
        assert pfd.polynomial_part.is_zero()
        assert pfd.series(50).coeffs == series_expand(ONE, [1, 2, 3, 4], 50).coeffs

    def test_already_decomposed(self):
        pfd = partial_fractions(ONE, CyclotomicFactorization({1: 1}))
        assert [(t.period, t.power, t.numerator) for t in pfd.terms] == [(1, 1, ONE)]

    def test_single_block_top_power_only(self):
        pfd = partial_fractions(ONE, CyclotomicFactorization({1: 2}))
        assert [(t.period, t.power, t.numerator) for t in pfd.terms] == [(1, 2, ONE)]

    def test_rejects_improper(self):
        with pytest.raises(DomainError):
            partial_fractions(P(0, 1), CyclotomicFactorization({1: 1}))

    @given(
        parts=st.lists(st.integers(1, 6), min_size=1, max_size=4),
        num_coeffs=st.lists(
            st.fractions(max_denominator=9, min_value=-5, max_value=5),
            min_size=1,
            max_size=3,
        ),
    )
    @settings(max_examples=40, deadline=None)
    def test_reconstruction_invariant(self, parts, num_coeffs):
        fact = factor_denominator(parts)
        numerator = Polynomial(num_coeffs)
        if numerator.degree >= fact.degree():
            return
        pfd = partial_fractions(numerator, fact)
        order = 3 * fact.degree()
        direct = series_expand(numerator, parts, order)
        assert pfd.series(order).coeffs == direct.coeffs
