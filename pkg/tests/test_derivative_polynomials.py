"""Derivative polynomials: closed forms, Riccati chain, roots, interlacing."""

from fractions import Fraction

import pytest

from gammazeta import (
    DefectError,
    GaussianRational,
    Polynomial,
    derivative_polynomial,
    interlacing_check,
    reduced_polynomial,
    riccati_derivative,
    roots_in_unit_interval,
)

RICCATI_CASES = (
    (1, 0, 1),  # logistic decay: x' = x^2 - x
    (1, GaussianRational(0, 1), GaussianRational(0, -1)),  # tan: x' = x^2 + 1
    (-1, 1, -1),  # tanh: x' = 1 - x^2
)


class TestClosedForms:
    def test_frozen_low_degrees(self):
        assert derivative_polynomial(2) == Polynomial((0, -1, 1))  # x^2 - x
        # expanding E(2,0) x (x-1)^2 + E(2,1) x^2 (x-1) by hand: 2x^3 - 3x^2 + x
        assert derivative_polynomial(3) == Polynomial((0, 1, -3, 2))

    def test_stirling_form_degree_four(self):
        # sum_k (-1)^(4-k) (k-1)! S2(4,k) x^k = -x + 6x^2*... frozen by hand:
        # k=1: -1*1*1, k=2: +1*7, k=3: -2*6, k=4: +6*1
        assert derivative_polynomial(4) == Polynomial((0, -1, 7, -12, 6))

    def test_forms_agree_through_degree_20(self):
        for n in range(2, 21):
            derivative_polynomial(n)  # raises DefectError on any mismatch

    def test_divisibility_and_quotient_through_20(self):
        for n in range(2, 21):
            q = derivative_polynomial(n)
            p = reduced_polynomial(n - 2)
            assert Polynomial((0, 1)) * Polynomial.x_minus(1) * p == q

    def test_reduced_frozen(self):
        assert reduced_polynomial(0) == Polynomial((1,))
        assert reduced_polynomial(1) == Polynomial((-1, 2))  # 2x - 1
        # P_2 = (x-1)^2 + 4x(x-1) + x^2 = 6x^2 - 6x + 1
        assert reduced_polynomial(2) == Polynomial((1, -6, 6))


class TestRiccati:
    def test_first_derivative_is_the_equation(self):
        assert riccati_derivative(1, 1, 0, 1) == Polynomial((0, -1, 1))
        assert riccati_derivative(1, -1, 1, -1) == Polynomial((1, 0, -1))

    def test_tangent_second_derivative(self):
        # symbolic chain rule on x' = x^2 + 1 twice: x'' = 2x(x^2+1) = 2x^3+2x
        i = GaussianRational(0, 1)
        assert riccati_derivative(2, 1, i, -i) == Polynomial((0, 2, 0, 2))

    def test_specializes_to_derivative_polynomials(self):
        for n in range(1, 13):
            assert riccati_derivative(n, 1, 0, 1) == derivative_polynomial(n + 1)

    def test_chain_property_three_equations(self):
        for a, alpha, beta in RICCATI_CASES:
            rhs = (Polynomial((-alpha, 1)) * Polynomial((-beta, 1))).scale(a)
            current = riccati_derivative(1, a, alpha, beta)
            for n in range(1, 13):
                nxt = riccati_derivative(n + 1, a, alpha, beta)
                assert nxt == current.derivative() * rhs
                current = nxt

    def test_fractional_coefficients_stay_exact(self):
        p = riccati_derivative(3, Fraction(1, 2), Fraction(1, 3), Fraction(2, 5))
        assert all(isinstance(c, Fraction) for c in p.coeffs)

    def test_rejects_degenerate_leading_coefficient(self):
        with pytest.raises(ValueError):
            riccati_derivative(2, 0, 0, 1)
        with pytest.raises(ValueError):
            riccati_derivative(0, 1, 0, 1)


class TestRoots:
    def test_single_root_of_degree_one(self):
        (bracket,) = roots_in_unit_interval(reduced_polynomial(1))
        lo, hi = bracket
        assert lo == hi == Fraction(1, 2)

    def test_degree_two_roots_match_quadratic_formula(self):
        # 6x^2 - 6x + 1 has roots 1/2 +- 1/(2 sqrt 3)
        roots = roots_in_unit_interval(reduced_polynomial(2))
        expected = (0.21132486540518713, 0.7886751345948129)
        assert len(roots) == 2
        for (lo, hi), value in zip(roots, expected):
            assert float(lo) <= value <= float(hi) or abs(float(lo) - value) < 1e-12

    def test_bracket_widths(self):
        for lo, hi in roots_in_unit_interval(reduced_polynomial(8)):
            assert hi - lo <= Fraction(1, 10**12)
            assert 0 < lo and hi < 1

    def test_counts_through_degree_12(self):
        for n in range(1, 13):
            assert len(roots_in_unit_interval(reduced_polynomial(n))) == n

    def test_rootless_polynomial_is_a_defect(self):
        with pytest.raises(DefectError):
            roots_in_unit_interval(Polynomial((1, 0, 1)))  # x^2 + 1

    def test_symmetry_of_even_degree_roots(self):
        # the root set of each reduced polynomial is symmetric about 1/2
        roots = roots_in_unit_interval(reduced_polynomial(4))
        mids = [(lo + hi) / 2 for lo, hi in roots]
        for left, right in zip(mids, reversed(mids)):
            assert abs(float(left + right) - 1.0) < 1e-11


class TestInterlacing:
    def test_degenerate_case(self):
        assert interlacing_check(0) is True

    def test_explicit_degree_one(self):
        # root of 2x-1 must lie between the two roots of 6x^2-6x+1
        assert interlacing_check(1) is True

    def test_through_degree_12(self):
        for n in range(13):
            assert interlacing_check(n) is True
