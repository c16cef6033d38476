"""Exponential partial Bell polynomials, potential polynomials, and
truncated power series with complex powers.

This is the brute-force side of every coefficient identity in the
package: Bell values computed here from the generic recurrence are
compared against the closed-form coefficient triangles, and series
powers computed here validate the expansion coefficients.

Conventions. A :class:`TruncatedSeries` stores ordinary coefficients
(``coeffs[n]`` multiplies t**n). The exponential-generating-function
coefficients g_n used by the potential polynomials relate to ordinary
coefficients b_n of the same series by g_n = n! * b_n, and the n-th
potential polynomial of a unit-constant series G is

    P_n^r = sum_{k=1..n} (r)_k B_{n,k}(g_1, g_2, ...),

the n-th EGF coefficient of G**r.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .combinatorics import binomial, falling_factorial


class SequenceTooShortError(ValueError):
    """An input sequence has fewer terms than B_{n,k} requires."""


def partial_bell(n: int, k: int, xs) -> Fraction:
    """Partial Bell polynomial B_{n,k}(x1, ..., x_{n-k+1}) over exact rationals.

    ``xs`` lists x1, x2, ... and must have at least n-k+1 terms.
    Computed by the recurrence

        B_{n,k} = sum_{m=1..n-k+1} C(n-1, m-1) x_m B_{n-m,k-1}

    with B_{0,0} = 1 and B_{n,0} = B_{0,k} = 0 otherwise.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k == 0 or n == 0:
        return Fraction(int(n == 0 and k == 0))
    if k > n:
        return Fraction(0)
    if len(xs) < n - k + 1:
        raise SequenceTooShortError(
            f"B_{{{n},{k}}} needs {n - k + 1} sequence terms, got {len(xs)}"
        )
    xs = [Fraction(x) for x in xs]
    # table[j][(rows)] built bottom-up: bell[j] holds B_{m,j} for m = j..n
    prev = {0: Fraction(1)}  # B_{m,0}: only m=0 nonzero
    for j in range(1, k + 1):
        cur: dict[int, Fraction] = {}
        for m in range(j, n - (k - j) + 1):
            acc = Fraction(0)
            for i in range(1, m - j + 2):
                b = prev.get(m - i)
                if b:
                    acc += binomial(m - 1, i - 1) * xs[i - 1] * b
            cur[m] = acc
        prev = cur
    return prev[n]


def bell_by_partitions(n: int, k: int, xs) -> Fraction:
    """B_{n,k} by direct enumeration of set partitions (trust anchor).

    Exponential in n; intended for n <= 8 in tests only.
    """
    if k == 0 or n == 0:
        return Fraction(int(n == 0 and k == 0))
    xs = [Fraction(x) for x in xs]
    total = Fraction(0)
    # enumerate partitions of {0..n-1} via restricted growth strings
    def rec(i: int, blocks: list[int]):
        nonlocal total
        if i == n:
            if len(blocks) == k:
                prod = Fraction(1)
                for size in blocks:
                    prod *= xs[size - 1]
                total += prod
            return
        for b in range(len(blocks)):
            blocks[b] += 1
            rec(i + 1, blocks)
            blocks[b] -= 1
        if len(blocks) < k:
            blocks.append(1)
            rec(i + 1, blocks)
            blocks.pop()

    rec(0, [])
    return total


class TruncatedSeries:
    """Power series known through a fixed order, ordinary coefficients.

    Coefficients are Fractions when construction allows it, complex
    otherwise; arithmetic keeps exactness as long as both operands are
    exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = []
        for i in range(n + 1):
            acc = 0
            for j in range(i + 1):
                acc += self.coeffs[j] * other.coeffs[i - j]
            out.append(acc)
        return TruncatedSeries(out)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def egf_coefficients(self) -> list:
        """g_n = n! * coeffs[n] for n >= 1 (potential-polynomial input)."""
        return [factorial(n) * c for n, c in enumerate(self.coeffs)][1:]


def series_log(series: TruncatedSeries) -> TruncatedSeries:
    """log of a unit-constant series, exact when coefficients are exact.

    Uses L' = S'/S: n l_n = n s_n - sum_{j=1..n-1} j l_j s_{n-j}.
    """
    if series.coeffs[0] != 1:
        raise ValueError("series_log requires constant term 1")
    s = series.coeffs
    n = series.order
    exact = all(isinstance(c, (int, Fraction)) for c in s)
    l = [Fraction(0) if exact else 0j] * (n + 1)
    for m in range(1, n + 1):
        acc = m * s[m]
        for j in range(1, m):
            acc -= j * l[j] * s[m - j]
        l[m] = Fraction(acc, m) if exact else acc / m
    return TruncatedSeries(l)


def series_exp(series: TruncatedSeries) -> TruncatedSeries:
    """exp of a zero-constant series: n e_n = sum_{j=1..n} j a_j e_{n-j}."""
    if series.coeffs[0] != 0:
        raise ValueError("series_exp requires constant term 0")
    a = series.coeffs
    n = series.order
    exact = all(isinstance(c, (int, Fraction)) for c in a)
    e = [Fraction(1) if exact else 1 + 0j] + [0] * n
    for m in range(1, n + 1):
        acc = 0
        for j in range(1, m + 1):
            acc += j * a[j] * e[m - j]
        e[m] = Fraction(acc, m) if exact else acc / m
    return TruncatedSeries(e)


def series_pow(base: TruncatedSeries, r, order: int | None = None) -> TruncatedSeries:
    """base**r as a truncated series, base having constant term 1.

    Computed as exp(r * log(base)): exact rationals when r and the base
    coefficients are rational, complex floating point otherwise. The
    t**n coefficient equals P_n^r / n! for the potential polynomial of
    the base's EGF coefficients.
    """
    if base.coeffs[0] != 1:
        raise ValueError("series_pow requires constant term 1")
    if order is None:
        order = base.order
    if order > base.order:
        raise ValueError("requested order exceeds the known coefficients")
    base = base.truncate(order)
    logs = series_log(base)
    exact = isinstance(r, (int, Fraction)) and all(
        isinstance(c, (int, Fraction)) for c in logs.coeffs
    )
    if exact:
        scaled = TruncatedSeries([Fraction(r) * c for c in logs.coeffs])
    else:
        rc = complex(r)
        scaled = TruncatedSeries([rc * complex(c) for c in logs.coeffs])
    return series_exp(scaled)


def potential_poly(n: int, r, gs):
    """Potential polynomial P_n^r = sum_k (r)_k B_{n,k}(g1, g2, ...).

    Bell values are exact; the falling-factorial combination happens in
    the arithmetic of ``r`` (exact for rational r, complex otherwise).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    acc = 0
    for k in range(1, n + 1):
        b = partial_bell(n, k, gs)
        if b:
            acc = acc + falling_factorial(r, k) * b
    return acc
