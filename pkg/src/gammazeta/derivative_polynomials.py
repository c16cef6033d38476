"""Derivative polynomials of solutions of constant-coefficient Riccati
equations, and root isolation for the reduced family.

If x(t) solves x' = a(x - alpha)(x - beta) then the n-th derivative of
x(t) is a polynomial in x:

    x^(n) = a**n * sum_{k=0..n-1} E(n,k) (x-alpha)**(k+1) (x-beta)**(n-k)

with Eulerian weights E(n,k). The logistic-decay case x(t) = 1/(1+e^t)
solves x' = x**2 - x, i.e. (a, alpha, beta) = (1, 0, 1); its derivative
polynomials are written Q here, deg Q_n = n, with the equivalent
Stirling-number closed form

    Q_n(x) = sum_{k=1..n} (-1)**(n-k) (k-1)! S2(n,k) x**k.

Q_n is divisible by x(x-1); the quotient P_{n-2} (deg n-2) is what the
zeta-side integral identities integrate against. For n >= 1, P_n has n
simple real roots in (0,1), located here by an exact-arithmetic sign
scan plus bisection (no floating point in any sign decision).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .combinatorics import eulerian, stirling2
from .polynomials import Polynomial
from .report import DefectError

GRID_POINTS = 4096
BRACKET_WIDTH = Fraction(1, 10**12)


def riccati_derivative(n: int, a, alpha, beta) -> Polynomial:
    """x^(n) as an exact polynomial in x for x' = a(x-alpha)(x-beta).

    Coefficients live in the ring generated by a, alpha, beta (ints,
    Fractions, or GaussianRational for conjugate root pairs, e.g.
    tan with alpha = i, beta = -i).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not a:
        raise ValueError("leading coefficient a must be nonzero")
    xa = Polynomial((-alpha, 1))
    xb = Polynomial((-beta, 1))
    if n == 1:
        return (xa * xb).scale(a)
    acc = Polynomial.zero()
    xa_pow = xa  # (x-alpha)**(k+1)
    xb_pow = xb**n  # (x-beta)**(n-k)
    for k in range(n):
        acc = acc + (xa_pow * xb_pow).scale(eulerian(n, k))
        xa_pow = xa_pow * xa
        xb_pow = xb_pow.div_linear(beta)
    an = 1
    for _ in range(n):
        an = an * a
    return acc.scale(an)


def _q_eulerian(n: int) -> Polynomial:
    acc = Polynomial.zero()
    x_pow = Polynomial((0, 1))  # x**(k+1)
    for k in range(n - 1):
        acc = acc + (x_pow * Polynomial.x_minus(1) ** (n - 1 - k)).scale(
            eulerian(n - 1, k)
        )
        x_pow = x_pow * Polynomial((0, 1))
    return acc


def _q_stirling(n: int) -> Polynomial:
    coeffs = [0] * (n + 1)
    for k in range(1, n + 1):
        v = factorial(k - 1) * stirling2(n, k)
        coeffs[k] = v if (n - k) % 2 == 0 else -v
    return Polynomial(coeffs)


def derivative_polynomial(n: int) -> Polynomial:
    """Q_n for the logistic-decay case, n >= 2.

    Computes both closed forms and refuses to return a value on which
    they disagree.
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    from_eulerian = _q_eulerian(n)
    from_stirling = _q_stirling(n)
    if from_eulerian != from_stirling:
        raise DefectError(f"Q_{n}: Eulerian and Stirling closed forms disagree")
    return from_eulerian


def reduced_polynomial(n: int) -> Polynomial:
    """P_n = Q_{n+2} / (x(x-1)), degree n, built from its Eulerian form.

    The divisibility is re-derived, not assumed: the quotient of Q_{n+2}
    by x and then (x-1) must match, else a defect is raised.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = Polynomial.zero()
    for k in range(n + 1):
        acc = acc + (
            Polynomial((0, 1)) ** k * Polynomial.x_minus(1) ** (n - k)
        ).scale(eulerian(n + 1, k))
    try:
        quotient = derivative_polynomial(n + 2).shift_down().div_linear(1)
    except ValueError as exc:
        raise DefectError(f"Q_{n + 2} is not divisible by x(x-1)") from exc
    if quotient != acc:
        raise DefectError(f"P_{n}: Eulerian form differs from Q_{n + 2}/(x(x-1))")
    return acc


def _sign_at(p: Polynomial, point: Fraction) -> int:
    v = p.eval_int_scaled(point.numerator, point.denominator)
    return (v > 0) - (v < 0)


def roots_in_unit_interval(p: Polynomial) -> list[tuple[Fraction, Fraction]]:
    """Bracket every root of p in (0,1) to width <= 1e-12, exactly.

    Scans a uniform grid of 4096 cells for sign changes (all roots of
    the reduced polynomials are simple, so sign changes find them),
    then bisects with exact rational arithmetic. A grid point that is
    itself a root yields a zero-width bracket. Raises DefectError if
    fewer brackets than deg(p) appear.
    """
    grid = [Fraction(i, GRID_POINTS) for i in range(GRID_POINTS + 1)]
    signs = [_sign_at(p, g) for g in grid]
    brackets: list[tuple[Fraction, Fraction]] = []
    last_nonzero = 0  # index of last grid point with nonzero sign
    for i, sg in enumerate(signs):
        if sg == 0:
            if 0 < i < GRID_POINTS:
                brackets.append((grid[i], grid[i]))
            continue
        if signs[last_nonzero] != 0 and signs[last_nonzero] * sg < 0:
            zero_between = any(signs[j] == 0 for j in range(last_nonzero + 1, i))
            if not zero_between:
                lo, hi = grid[last_nonzero], grid[i]
                slo = signs[last_nonzero]
                while hi - lo > BRACKET_WIDTH:
                    mid = (lo + hi) / 2
                    sm = _sign_at(p, mid)
                    if sm == 0:
                        lo = hi = mid
                        break
                    if sm == slo:
                        lo = mid
                    else:
                        hi = mid
                brackets.append((lo, hi))
        last_nonzero = i
    if len(brackets) < p.degree:
        raise DefectError(
            f"found {len(brackets)} roots in (0,1), expected {p.degree}"
        )
    return brackets


def interlacing_check(n: int) -> bool:
    """True iff exactly one root of P_n lies between each pair of
    consecutive roots of P_{n+1}; vacuously true for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return True
    outer = roots_in_unit_interval(reduced_polynomial(n + 1))
    inner = roots_in_unit_interval(reduced_polynomial(n))
    if len(outer) != n + 1 or len(inner) != n:
        return False
    for i in range(n):
        gap_lo = outer[i][1]  # right end of i-th outer bracket
        gap_hi = outer[i + 1][0]
        inside = [r for r in inner if gap_lo < r[0] and r[1] < gap_hi]
        if len(inside) != 1:
            return False
    return True
