from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpartition import (
    DomainError,
    IntegrityError,
    Polynomial,
    QuasiPolynomial,
    QuasiPolynomialSum,
    eval_floor_form,
    format_quasipolynomial_sum,
    normalize_qps,
    pmn_table,
    qp_eval,
    qps_equal,
    qps_eval,
    qps_values,
    to_floor_form,
)

from golden import CLASSICAL_PMN


def qp(period, *pieces):
    return QuasiPolynomial(period, tuple(Polynomial(p) for p in pieces))


class TestQpEval:
    def test_residue_convention(self):
        half = qp(2, (F(-1, 4),), (F(1, 4),))
        assert qp_eval(half, 5) == F(-1, 4)  # 5 = 1 mod 2 selects piece 1
        assert qp_eval(half, 0) == F(1, 4)  # 0 = 0 mod 2 selects piece 2
        third = qp(3, (0,), (F(-1, 9),), (F(1, 9),))
        assert qp_eval(third, 6) == F(1, 9)  # 6 = 0 mod 3 selects piece 3

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            qp_eval(qp(1, (1,)), -1)

    @given(n=st.integers(0, 500))
    @settings(max_examples=60, deadline=None)
    def test_periodicity(self, n):
        f = qp(3, (1, 2), (F(1, 3),), (0, 0, 1))
        assert qp_eval(f, n) == qp_eval(f, n + 3)


class TestQpsEval:
    def test_classical_values(self):
        assert qps_eval(CLASSICAL_PMN[2], 5) == 3
        assert qps_eval(CLASSICAL_PMN[4], 0) == 1
        assert qps_eval(CLASSICAL_PMN[5], 5) == 7

    def test_shift(self):
        f = QuasiPolynomialSum(4, (qp(1, (1, 1)),))
        assert qps_eval(f, 3) == 0
        assert qps_eval(f, 4) == 1
        assert qps_eval(f, 10) == 7

    def test_non_integer_total_is_integrity_error(self):
        f = QuasiPolynomialSum(0, (qp(1, (F(1, 3),)),))
        with pytest.raises(IntegrityError):
            qps_eval(f, 0)

    def test_values_match_pointwise_eval(self):
        f = CLASSICAL_PMN[5]
        assert qps_values(f, 200) == [qps_eval(f, n) for n in range(200)]
        assert qps_values(f, 200) == pmn_table(5, 199)

    def test_constructor_requires_increasing_periods(self):
        with pytest.raises(DomainError):
            QuasiPolynomialSum(0, (qp(2, (1,), (1,)), qp(2, (1,), (1,))))


class TestNormalize:
    def test_constant_across_residues_moves_to_period_1(self):
        f = QuasiPolynomialSum(0, (qp(2, (F(5, 7),), (F(5, 7),)),))
        assert normalize_qps(f) == QuasiPolynomialSum(0, (qp(1, (F(5, 7),)),))

    def test_repeating_pieces_drop_to_true_period(self):
        f = QuasiPolynomialSum(
            0, (qp(4, (F(-1, 4),), (F(1, 4),), (F(-1, 4),), (F(1, 4),)),)
        )
        assert normalize_qps(f) == QuasiPolynomialSum(
            0, (qp(2, (F(-1, 4),), (F(1, 4),)),)
        )

    def test_classical_forms_are_fixed_points(self):
        for f in CLASSICAL_PMN.values():
            assert normalize_qps(f) == f

    def test_cross_period_content_separates(self):
        # A period-6 component with mean content and 2- and 3-periodic parts.
        mixed = qp(6, (2,), (3,), (2,), (3,), (2,), (3,))
        normalized = normalize_qps(QuasiPolynomialSum(0, (mixed,)))
        assert [c.period for c in normalized.components] == [1, 2]
        for n in range(0, 36):
            assert qps_eval(normalized, n) == (2 if n % 2 == 1 else 3)

    def test_zero_function_normalizes_to_empty(self):
        f = QuasiPolynomialSum(0, (qp(3, (0,), (0,), (0,)),))
        assert normalize_qps(f).components == ()

    @staticmethod
    def random_sums():
        coeff = st.fractions(max_denominator=6, min_value=-4, max_value=4)
        piece = st.lists(coeff, min_size=1, max_size=3).map(Polynomial)

        def component(period):
            return st.lists(piece, min_size=period, max_size=period).map(
                lambda ps: QuasiPolynomial(period, tuple(ps))
            )

        def build(periods):
            return st.tuples(*[component(r) for r in sorted(periods)]).map(
                lambda comps: QuasiPolynomialSum(0, comps)
            )

        return st.sets(st.integers(1, 6), min_size=1, max_size=3).flatmap(build)

    @given(f=random_sums())
    @settings(max_examples=60, deadline=None)
    def test_idempotent_and_value_preserving(self, f):
        g = normalize_qps(f)
        assert normalize_qps(g) == g
        for n in range(0, 40):
            raw = sum((qp_eval(c, n) for c in f.components), F(0))
            new = sum((qp_eval(c, n) for c in g.components), F(0))
            assert raw == new

    @given(f=random_sums())
    @settings(max_examples=30, deadline=None)
    def test_equality_is_functional(self, f):
        # Re-express every component at twice its period: syntactically
        # different, same function, so the normal forms must coincide.
        relifted = QuasiPolynomialSum(
            0,
            tuple(
                QuasiPolynomial(
                    2 * c.period,
                    tuple(
                        c.pieces[(i - 1) % c.period]
                        for i in range(1, 2 * c.period + 1)
                    ),
                )
                for c in f.components
            ),
        )
        assert qps_equal(f, relifted)
        if normalize_qps(f).components:
            doubled = QuasiPolynomialSum(
                0,
                tuple(
                    QuasiPolynomial(c.period, tuple(p * F(2) for p in c.pieces))
                    for c in f.components
                ),
            )
            assert not qps_equal(f, doubled)


class TestFloorForm:
    def test_trivial_formula(self):
        ff = to_floor_form(CLASSICAL_PMN[1])
        assert ff.terms == ((1, (Polynomial((1,)),)),)
        assert eval_floor_form(ff, 10**50) == 1

    def test_parts_at_most_two_equals_floor_expression(self):
        ff = to_floor_form(CLASSICAL_PMN[2])
        for n in range(0, 101):
            assert eval_floor_form(ff, n) == n // 2 + 1
        assert eval_floor_form(ff, 7) == 4

    def test_agrees_with_direct_evaluation(self):
        ff = to_floor_form(CLASSICAL_PMN[4])
        for n in range(0, 101):
            assert eval_floor_form(ff, n) == qps_eval(CLASSICAL_PMN[4], n)
        assert eval_floor_form(ff, 13) == 18

    def test_rejects_shifted(self):
        shifted = QuasiPolynomialSum(1, (qp(1, (1, 1)),))
        with pytest.raises(DomainError):
            to_floor_form(shifted)

    def test_rejects_negative_argument(self):
        with pytest.raises(DomainError):
            eval_floor_form(to_floor_form(CLASSICAL_PMN[2]), -1)


class TestRendering:
    def test_stable_component_lines(self):
        text = format_quasipolynomial_sum(CLASSICAL_PMN[4])
        assert text.splitlines()[1] == "period 2: [-n/32 - 5/32, n/32 + 5/32]"

    def test_shift_line(self):
        f = QuasiPolynomialSum(4, (qp(1, (1,)),))
        assert format_quasipolynomial_sum(f).splitlines()[0] == "shift: 4"

    def test_zero_formula(self):
        assert format_quasipolynomial_sum(QuasiPolynomialSum(0, ())) == "period 1: [0]"
