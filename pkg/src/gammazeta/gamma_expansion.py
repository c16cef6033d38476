"""Factorial series expansion of Gamma(s+1) and its coefficient triangle.

The expansion integrates (-log(1-t))**s = t**s * (1 + t/2 + t**2/3 + ...)**s
over (0, 1) termwise:

    Gamma(s+1) = 1/(s+1) + sum_{a>=1} 1/(s+a+1) * A_a(s),
    A_a(s)     = sum_{b=1..a} (s)_b * c[a,b] / (a+b)!,

where the integer triangle c[a,b] collects the Bell-polynomial values of
the sequence (1/2, 2!/3, 3!/4, ...):

    B_{a,b}(1/2, 2!/3, ...) = a! * c[a,b] / (a+b)!.

Two equivalent routes produce c[a,b]: an alternating sum over Stirling
numbers of the first kind (the definition), and the two-term recurrence

    c[a,b] = (a+b-1) * (c[a-1,b] + c[a-1,b-1]),    c[0,0] = 1,

whose equivalence is one of the verified identities. The evaluator also
offers a "recurrence" path that never touches the triangle, propagating
the summands g[a,b] = (s)_b c[a,b]/(a+b)! directly via

    g[a,b] = (a+b-1)/(a+b) g[a-1,b] + (s-b+1)/(a+b) g[a-1,b-1].

Arithmetic backends: for rational s both paths run over exact integers
(scaled by a common denominator per term) and convert each term to a
correctly rounded float at the very end. For non-real s they run in
complex floating point, which is reliable only to moderate truncation
depth; the inner sums cancel catastrophically beyond roughly 120 terms
for non-integer s, which is why the exact backend exists.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational

from .bell import TruncatedSeries
from .combinatorics import CachedTriangle, binomial, stirling1
from .report import DomainError, PoleProximityError, SeriesReport

POLE_TOLERANCE = 1e-12


def _coeff_row(rows: list[list[int]], n: int) -> list[int]:
    if n == 0:
        return [1]
    prev = rows[n - 1]
    row = [0] * (n + 1)
    for b in range(1, n + 1):
        upper = prev[b] if b < len(prev) else 0
        row[b] = (n + b - 1) * (upper + prev[b - 1])
    return row


#: c[a,b] built by the two-term recurrence.
GAMMA_COEFFS = CachedTriangle(_coeff_row)


def coeff(alpha: int, beta: int) -> int:
    """Triangle entry c[alpha, beta] (recurrence route)."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    return GAMMA_COEFFS.entry(alpha, beta)


def coeff_direct(alpha: int, beta: int) -> int:
    """c[alpha, beta] from the defining alternating Stirling-number sum,

        sum_{k=1..beta} (-1)**(beta-k) s1(alpha+k, k) C(alpha+beta, beta-k),

    independent of the recurrence route. The sum represents rows
    alpha >= 1 only; row 0 is the boundary row (1, 0, 0, ...) coming
    from the leading 1 of the underlying double series, where the
    alternating sum instead telescopes to (-1)**(beta+1).
    """
    if alpha < 0 or beta < 0:
        raise ValueError("indices must be nonnegative")
    if alpha == 0:
        return 1 if beta == 0 else 0
    if beta == 0:
        return 0
    acc = 0
    for k in range(1, beta + 1):
        term = stirling1(alpha + k, k) * binomial(alpha + beta, beta - k)
        acc += term if (beta - k) % 2 == 0 else -term
    return acc


def coeff_table(max_row: int) -> list[list[int]]:
    """Rows 0..max_row of the triangle; row a has entries b = 0..a."""
    return GAMMA_COEFFS.rows(max_row)


def log_series_bell_value(alpha: int, beta: int) -> Fraction:
    """Exact Bell value B_{alpha,beta}(1/2, 2!/3, 3!/4, ...) as
    alpha! * c[alpha,beta] / (alpha+beta)!."""
    if not 1 <= beta <= alpha:
        raise ValueError("requires 1 <= beta <= alpha")
    return Fraction(factorial(alpha) * coeff(alpha, beta), factorial(alpha + beta))


def _as_fraction(s) -> Fraction | None:
    """Exact rational view of s, or None when s is truly complex/irrational.

    Floats convert exactly (their binary value is rational), so the
    exact backend serves every real argument.
    """
    if isinstance(s, Rational):
        return Fraction(s)
    if isinstance(s, float):
        return Fraction(s)
    if isinstance(s, complex):
        if s.imag == 0.0:
            return Fraction(s.real)
        return None
    raise TypeError(f"unsupported argument type {type(s)!r}")


def _check_pole(den, label: str) -> None:
    if isinstance(den, Fraction):
        bad = den == 0
    else:
        bad = abs(den) < POLE_TOLERANCE
    if bad:
        raise PoleProximityError(f"denominator {label} vanishes")


def _terms_exact_direct(p: int, q: int, n_terms: int) -> list[float]:
    GAMMA_COEFFS.ensure(n_terms - 1)
    terms = [q / (p + q)]
    falling = [1] * n_terms  # falling[b] = prod_{j<b} (p - j q) = q**b * (s)_b
    for b in range(1, n_terms):
        falling[b] = falling[b - 1] * (p - (b - 1) * q)
    for a in range(1, n_terms):
        row = GAMMA_COEFFS.row(a)
        num = 0
        rising = 1  # (2a)!/(a+b)! accumulated while b descends from a
        qpow = 1    # q**(a-b)
        for b in range(a, 0, -1):
            num += falling[b] * row[b] * qpow * rising
            rising *= a + b
            qpow *= q
        den = q**a * factorial(2 * a) * (p + (a + 1) * q)
        terms.append((num * q) / den)
    return terms


def _terms_exact_recurrence(p: int, q: int, n_terms: int) -> list[float]:
    # integer form of the g-recurrence: M[a,b] = q**b (a+b)! g[a,b] satisfies
    # M[a,b] = (a+b-1) (M[a-1,b] + (p-(b-1)q) M[a-1,b-1]), M[0,0] = 1
    terms = [q / (p + q)]
    prev = [1]
    for a in range(1, n_terms):
        row = [0] * (a + 1)
        for b in range(1, a + 1):
            upper = prev[b] if b < len(prev) else 0
            row[b] = (a + b - 1) * (upper + (p - (b - 1) * q) * prev[b - 1])
        num = 0
        rising = 1
        qpow = 1
        for b in range(a, 0, -1):
            num += row[b] * qpow * rising
            rising *= a + b
            qpow *= q
        den = q**a * factorial(2 * a) * (p + (a + 1) * q)
        terms.append((num * q) / den)
        prev = row
    return terms


def _float_weights(a: int) -> list[float]:
    # c[a,b] * b!/(a+b)! as floats; folding b! into the exact factor keeps
    # both float factors in range ((s)_b alone overflows past b ~ 170)
    row = GAMMA_COEFFS.row(a)
    out = [0.0] * (a + 1)
    ratio = factorial(a)  # (a+b)!/b!, advanced by *(a+b)/b per step
    for b in range(1, a + 1):
        ratio = ratio * (a + b) // b
        out[b] = row[b] / ratio  # int/int true division is correctly rounded
    return out


def _terms_float_direct(s: complex, n_terms: int) -> list[complex]:
    GAMMA_COEFFS.ensure(n_terms - 1)
    _check_pole(s + 1, "s+1")
    terms = [1 / (s + 1)]
    # binom[b] = (s)_b / b!, numerically tame for all b
    binom = [1.0 + 0j] * n_terms
    for b in range(1, n_terms):
        binom[b] = binom[b - 1] * (s - b + 1) / b
    for a in range(1, n_terms):
        w = _float_weights(a)
        inner = 0j
        for b in range(a, 0, -1):  # smallest summands first
            inner += binom[b] * w[b]
        den = s + a + 1
        _check_pole(den, f"s+{a + 1}")
        terms.append(inner / den)
    return terms


def _terms_float_recurrence(s: complex, n_terms: int) -> list[complex]:
    _check_pole(s + 1, "s+1")
    terms = [1 / (s + 1)]
    prev = [1.0 + 0j]
    for a in range(1, n_terms):
        row = [0j] * (a + 1)
        for b in range(1, a + 1):
            upper = prev[b] if b < len(prev) else 0j
            row[b] = (a + b - 1) / (a + b) * upper + (s - b + 1) / (a + b) * prev[b - 1]
        den = s + a + 1
        _check_pole(den, f"s+{a + 1}")
        terms.append(sum(row[b] for b in range(a, 0, -1)) / den)
        prev = row
    return terms


def expansion_terms(s, n_terms: int, path: str = "direct") -> list[complex]:
    """The first ``n_terms`` terms of the expansion (index a = 0..n_terms-1).

    Term 0 is 1/(s+1); term a is A_a(s)/(s+a+1). ``path`` selects the
    triangle-backed direct sums ("direct") or the summand recurrence
    ("recurrence"). Rational s evaluates exactly termwise; complex s in
    floating point.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    if path not in ("direct", "recurrence"):
        raise ValueError(f"unknown path {path!r}")
    frac = _as_fraction(s)
    if frac is not None:
        if frac <= -1:
            raise DomainError("expansion requires Re(s) > -1")
        p, q = frac.numerator, frac.denominator
        pole = -frac - 1  # s = -(a+1) hits term a
        if pole == int(pole) and 0 <= int(pole) < n_terms:
            raise PoleProximityError(f"s = {s} sits on the pole s+{int(pole) + 1} = 0")
        if path == "direct":
            out = _terms_exact_direct(p, q, n_terms)
        else:
            out = _terms_exact_recurrence(p, q, n_terms)
        return [complex(t) for t in out]
    sc = complex(s)
    if sc.real <= -1:
        raise DomainError("expansion requires Re(s) > -1")
    if path == "direct":
        return _terms_float_direct(sc, n_terms)
    return _terms_float_recurrence(sc, n_terms)


def partial_sums(s, n_terms: int, path: str = "direct") -> list[complex]:
    """Running partial sums of :func:`expansion_terms`."""
    out = []
    acc = 0j
    for t in expansion_terms(s, n_terms, path):
        acc += t
        out.append(acc)
    return out


def integrand_coeffs(s, order: int) -> TruncatedSeries:
    """Coefficients A_a(s) of t**a in (1 + t/2 + t**2/3 + ...)**s.

    Exact Fractions for rational s, complex otherwise. A_0 = 1.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    GAMMA_COEFFS.ensure(order)
    frac = _as_fraction(s)
    if frac is not None:
        p, q = frac.numerator, frac.denominator
        coeffs: list = [Fraction(1)]
        falling = [1] * (order + 1)
        for b in range(1, order + 1):
            falling[b] = falling[b - 1] * (p - (b - 1) * q)
        for a in range(1, order + 1):
            row = GAMMA_COEFFS.row(a)
            num = 0
            rising = 1
            qpow = 1
            for b in range(a, 0, -1):
                num += falling[b] * row[b] * qpow * rising
                rising *= a + b
                qpow *= q
            coeffs.append(Fraction(num, q**a * factorial(2 * a)))
        return TruncatedSeries(coeffs)
    sc = complex(s)
    coeffs = [1 + 0j]
    binom = [1.0 + 0j] * (order + 1)
    for b in range(1, order + 1):
        binom[b] = binom[b - 1] * (sc - b + 1) / b
    for a in range(1, order + 1):
        w = _float_weights(a)
        coeffs.append(sum(binom[b] * w[b] for b in range(a, 0, -1)))
    return TruncatedSeries(coeffs)


def evaluate(s, n_terms: int, path: str = "direct") -> SeriesReport:
    """Evaluate the truncated expansion and compare against the Gamma oracle."""
    from .oracles import gamma_ref

    terms = expansion_terms(s, n_terms, path)
    report = SeriesReport(
        s=complex(s),
        terms=n_terms,
        path=path,
        partial_sum=sum(terms),
        term_magnitudes=[abs(t) for t in terms],
    )
    return report.with_reference(gamma_ref(complex(s) + 1))
