"""Named verification suites over every identity the package upholds.

Each check is a function of (depth, rng) returning None on success or a
short witness string describing the first failure. Suites group checks
by subject; ``run_suite`` executes them (optionally in parallel, see
the THREADS environment variable) and reports one line per check in a
deterministic order.

Exact claims are checked in exact arithmetic; tolerances appear only
where complex floating point is intrinsic.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import (
    bell,
    combinatorics as comb,
    derivative_polynomials as dpoly,
    gamma_expansion,
    mittag_leffler,
    oracles,
    zeta_expansion,
)
from .polynomials import GaussianRational, Polynomial

DEFAULT_SEED = 20214097


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    witness: str | None


def _gamma_bell_sequence(length: int) -> list[Fraction]:
    # x_m = m!/(m+1): the sequence behind the Gamma-side triangle
    return [Fraction(factorial(m), m + 1) for m in range(1, length + 1)]


def _zeta_bell_sequence(length: int) -> list[Fraction]:
    # 0, 2!/3, 0, 4!/5, ...: even entries only
    out = []
    for m in range(1, length + 1):
        out.append(Fraction(factorial(m), m + 1) if m % 2 == 0 else Fraction(0))
    return out


# ---------------------------------------------------------------- stirling

def check_stirling1_row_sums(depth: int, rng) -> str | None:
    for n in range(depth + 1):
        total = sum(comb.stirling1(n, k) for k in range(n + 1))
        if total != factorial(n):
            return f"sum of row {n} is {total}, expected {n}!"
    return None


def check_eulerian_row_sums_and_symmetry(depth: int, rng) -> str | None:
    for n in range(1, depth + 1):
        row = [comb.eulerian(n, k) for k in range(n)]
        if sum(row) != factorial(n):
            return f"row {n} sums to {sum(row)}, expected {n}!"
        if row != row[::-1]:
            return f"row {n} is not symmetric"
    return None


def check_stirling1_telescoped(depth: int, rng) -> str | None:
    # s1(n,k) = sum_{j=1..k} (n-j) s1(n-j, k+1-j) for n >= k+2
    for n in range(2, depth + 1):
        for k in range(0, n - 1):  # k = 0 checks the empty-sum boundary
            total = sum(
                (n - j) * comb.stirling1(n - j, k + 1 - j) for j in range(1, k + 1)
            )
            if total != comb.stirling1(n, k):
                return f"telescoped sum fails at (n,k)=({n},{k})"
    return None


def check_stirling1_generating_function(depth: int, rng) -> str | None:
    # coefficient of t^n in (1-t)^(-u) equals sum_k s1(n,k) u^k / n!
    order = 12
    for u in (1, 2, 3):
        coeff = Fraction(1)
        for n in range(1, order + 1):
            coeff = coeff * Fraction(u + n - 1, n)  # C(u+n-1, n)
            direct = Fraction(
                sum(comb.stirling1(n, k) * u**k for k in range(1, n + 1)),
                factorial(n),
            )
            if coeff != direct:
                return f"generating function fails at u={u}, n={n}"
    return None


def check_rising_equals_shifted_falling(depth: int, rng) -> str | None:
    for _ in range(20):
        s = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        for k in range(11):
            rise = comb.rising_factorial(s, k)
            fall = comb.falling_factorial(s + k - 1, k)
            if abs(rise - fall) > 1e-12 * max(1.0, abs(rise)):
                return f"mismatch at s={s}, k={k}"
    return None


# -------------------------------------------------------------------- bell

def check_partial_bell_boundaries(depth: int, rng) -> str | None:
    xs = _gamma_bell_sequence(14)
    for n in range(1, 13):
        if bell.partial_bell(n, 1, xs) != xs[n - 1]:
            return f"B({n},1) != x_{n}"
        if bell.partial_bell(n, n, xs) != xs[0] ** n:
            return f"B({n},{n}) != x_1^{n}"
    return None


def check_partial_bell_vs_enumeration(depth: int, rng) -> str | None:
    xs = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(8)]
    for n in range(1, 8):
        for k in range(1, n + 1):
            if bell.partial_bell(n, k, xs) != bell.bell_by_partitions(n, k, xs):
                return f"recurrence vs enumeration differ at ({n},{k})"
    return None


def check_series_pow_integer_powers(depth: int, rng) -> str | None:
    coeffs = [Fraction(1)] + [
        Fraction(rng.randint(-5, 5), rng.randint(1, 6)) for _ in range(8)
    ]
    base = bell.TruncatedSeries(coeffs)
    for r in (2, 3, 4):
        expected = base
        for _ in range(r - 1):
            expected = expected * base
        if bell.series_pow(base, r) != expected:
            return f"series_pow disagrees with repeated product at r={r}"
    return None


def check_series_pow_roundtrip(depth: int, rng) -> str | None:
    coeffs = [Fraction(1)] + [
        Fraction(rng.randint(-3, 3), rng.randint(2, 7)) for _ in range(8)
    ]
    base = bell.TruncatedSeries(coeffs)
    for r in (2, 3):
        back = bell.series_pow(bell.series_pow(base, r), Fraction(1, r))
        for c1, c2 in zip(back.coeffs, base.coeffs):
            if abs(float(c1 - c2)) > 1e-10:
                return f"roundtrip r={r} drifted by {float(c1 - c2):.2e}"
    return None


def check_potential_poly_squared_series(depth: int, rng) -> str | None:
    # r=2: potential polynomial equals the EGF coefficient of the squared series
    coeffs = [Fraction(1)] + [
        Fraction(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(4)
    ]
    base = bell.TruncatedSeries(coeffs)
    squared = base * base
    gs = base.egf_coefficients()
    for n in range(1, 5):
        expected = factorial(n) * squared.coeffs[n]
        got = bell.potential_poly(n, 2, gs)
        if got != expected:
            return f"potential poly r=2 fails at n={n}: {got} != {expected}"
    return None


# ----------------------------------------------------------------------- c

def check_c_direct_equals_recurrence(depth: int, rng) -> str | None:
    for a in range(depth + 1):
        for b in range(a + 2):
            if gamma_expansion.coeff_direct(a, b) != gamma_expansion.coeff(a, b):
                return f"routes disagree at ({a},{b})"
    return None


def check_c_diagonal_double_factorial(depth: int, rng) -> str | None:
    for a in range(min(depth, 12) + 1):
        if gamma_expansion.coeff(a, a) != comb.double_factorial_odd(a):
            return f"diagonal law fails at {a}"
    return None


def check_c_first_column_factorial(depth: int, rng) -> str | None:
    for a in range(1, min(depth, 12) + 1):
        if gamma_expansion.coeff(a, 1) != factorial(a):
            return f"first column fails at {a}"
    return None


def check_c_bell_identity(depth: int, rng) -> str | None:
    xs = _gamma_bell_sequence(min(depth, 10) + 1)
    for a in range(1, min(depth, 10) + 1):
        for b in range(1, a + 1):
            lhs = gamma_expansion.log_series_bell_value(a, b)
            rhs = bell.partial_bell(a, b, xs)
            if lhs != rhs:
                return f"Bell identity fails at ({a},{b}): {lhs} != {rhs}"
    return None


def check_gamma_path_equivalence(depth: int, rng) -> str | None:
    for s in (0.5, 1 + 1j, 2.3):
        direct = gamma_expansion.partial_sums(s, 50, "direct")
        rec = gamma_expansion.partial_sums(s, 50, "recurrence")
        for n, (d, r) in enumerate(zip(direct, rec), start=1):
            if abs(d - r) > 1e-12 * max(1.0, abs(d)):
                return f"paths diverge at s={s}, {n} terms: {abs(d - r):.2e}"
    return None


def check_gamma_integrand_power_identity(depth: int, rng) -> str | None:
    # integer power s=3: brace coefficients equal the exact cube of the series
    order = 10
    log_series = bell.TruncatedSeries(
        [Fraction(1)] + [Fraction(1, m + 2) for m in range(order)]
    )
    cubed = bell.series_pow(log_series, 3)
    mine = gamma_expansion.integrand_coeffs(3, order)
    if tuple(mine.coeffs) != cubed.coeffs:
        return "cube of the shifted-log series disagrees with brace coefficients"
    return None


def check_gamma_known_values(depth: int, rng) -> str | None:
    if abs(sum(gamma_expansion.expansion_terms(0.0, 8)) - 1.0) != 0.0:
        return "s=0 should collapse to exactly 1"
    rep50 = gamma_expansion.evaluate(1.0, 50)
    rep200 = gamma_expansion.evaluate(1.0, 200)
    if not rep200.rel_error < rep50.rel_error:
        return "error vs Gamma(2) failed to shrink between 50 and 200 terms"
    return None


# ----------------------------------------------------------------------- ml

def check_ml_table_equals_telescoped(depth: int, rng) -> str | None:
    for n in range(2, depth + 1):
        for k in range(1, n + 1):
            if mittag_leffler.coeff_telescoped(n, k) != mittag_leffler.coeff(n, k):
                return f"telescoped route fails at ({n},{k})"
    return None


def check_ml_parity_and_boundaries(depth: int, rng) -> str | None:
    # a[n,k] = 0 iff n-k odd (k >= 1); column 0 vanishes for n >= 1
    for n in range(depth + 1):
        if n >= 1 and mittag_leffler.coeff(n, 0) != 0:
            return f"a[{n},0] != 0"
        for k in range(1, n + 1):
            value = mittag_leffler.coeff(n, k)
            if (n - k) % 2 == 1 and value != 0:
                return f"a[{n},{k}] should vanish (odd gap)"
            if (n - k) % 2 == 0 and value == 0:
                return f"a[{n},{k}] vanishes unexpectedly"
    return None


def check_ml_diagonal_and_divisibility(depth: int, rng) -> str | None:
    for n in range(depth + 1):
        if mittag_leffler.coeff(n, n) != 2**n:
            return f"a[{n},{n}] != 2^{n}"
        for k in range(n + 1):
            if mittag_leffler.coeff(n, k) % (2**k) != 0:
                return f"2^{k} does not divide a[{n},{k}]"
    return None


def check_ml_generating_function(depth: int, rng) -> str | None:
    for n in range(min(depth, 10) + 1):
        lhs = mittag_leffler.generating_function_coeff(n).scale(factorial(n))
        if lhs != mittag_leffler.ml_poly(n):
            return f"generating-function route fails at n={n}"
    return None


def check_ml_bateman_recurrence(depth: int, rng) -> str | None:
    # n g_n = (n-2) g_{n-2} + 2x g_{n-1}, g_n = M_n/n!, exact in Fractions
    two_x = Polynomial((0, 2))
    for n in range(2, 13):
        gn = mittag_leffler.ml_poly(n).scale(Fraction(1, factorial(n)))
        gn1 = mittag_leffler.ml_poly(n - 1).scale(Fraction(1, factorial(n - 1)))
        gn2 = mittag_leffler.ml_poly(n - 2).scale(Fraction(1, factorial(n - 2)))
        if gn.scale(n) != gn2.scale(n - 2) + two_x * gn1:
            return f"normalized recurrence fails at n={n}"
    return None


# ----------------------------------------------------------------------- b

def check_b_direct_equals_recurrence(depth: int, rng) -> str | None:
    for a in range(min(depth, 20) + 1):
        for b in range(a // 2 + 2):
            if zeta_expansion.coeff_direct(a, b) != zeta_expansion.coeff(a, b):
                return f"routes disagree at ({a},{b})"
    return None


def check_b_first_column(depth: int, rng) -> str | None:
    for n in range(1, min(depth, 8) + 1):
        if zeta_expansion.coeff(2 * n, 1) != factorial(2 * n):
            return f"b[{2 * n},1] != (2n)!"
    return None


def check_b_bell_identity(depth: int, rng) -> str | None:
    xs = _zeta_bell_sequence(min(depth, 10) + 1)
    for a in range(1, min(depth, 10) + 1):
        for b in range(1, a + 1):
            lhs = zeta_expansion.log_ratio_bell_value(a, b)
            rhs = bell.partial_bell(a, b, xs)
            if lhs != rhs:
                return f"Bell identity fails at ({a},{b}): {lhs} != {rhs}"
    return None


def check_zeta_path_equivalence(depth: int, rng) -> str | None:
    for s in (0.5, 1.0, 2 + 1j):
        direct = zeta_expansion.partial_sums(s, 40, "direct")
        rec = zeta_expansion.partial_sums(s, 40, "recurrence")
        for n, (d, r) in enumerate(zip(direct, rec), start=1):
            if abs(d - r) > 1e-12 * max(1.0, abs(d)):
                return f"paths diverge at s={s}, {n} terms: {abs(d - r):.2e}"
    return None


def check_zeta_integrand_power_identity(depth: int, rng) -> str | None:
    order = 5
    inner = bell.TruncatedSeries(
        [Fraction(1)] + [Fraction(1, 2 * m + 3) for m in range(order)]
    )
    squared = bell.series_pow(inner, 2)
    mine = zeta_expansion.log_ratio_coeffs(2, order)
    if tuple(mine.coeffs) != squared.coeffs:
        return "square of the even log series disagrees with brace coefficients"
    return None


def check_zeta_target_convergence(depth: int, rng) -> str | None:
    for s in (0.75, 2.0):
        rep40 = zeta_expansion.evaluate(s, 40)
        rep160 = zeta_expansion.evaluate(s, 160)
        if not rep160.rel_error < rep40.rel_error:
            return f"error vs eta(s)Gamma(s) failed to shrink at s={s}"
        tail = rep160.term_magnitudes[8:]
        if not all(b < a for a, b in zip(tail, tail[1:])):
            return f"term magnitudes not eventually decreasing at s={s}"
    return None


# --------------------------------------------------------------------- poly

def check_q_closed_forms(depth: int, rng) -> str | None:
    for n in range(2, depth + 1):
        dpoly.derivative_polynomial(n)  # raises DefectError on mismatch
    return None


def check_q_divisibility(depth: int, rng) -> str | None:
    for n in range(0, depth - 1):
        dpoly.reduced_polynomial(n)  # raises DefectError if x(x-1) fails
    return None


_RICCATI_CASES = (
    (1, 0, 1),  # logistic decay: x' = x^2 - x
    (1, GaussianRational(0, 1), GaussianRational(0, -1)),  # tan: x' = x^2 + 1
    (-1, 1, -1),  # tanh: x' = 1 - x^2
)


def check_riccati_chain(depth: int, rng) -> str | None:
    for a, alpha, beta in _RICCATI_CASES:
        rhs_poly = Polynomial((-alpha, 1)) * Polynomial((-beta, 1))
        rhs_poly = rhs_poly.scale(a)
        current = dpoly.riccati_derivative(1, a, alpha, beta)
        for n in range(1, min(depth, 12) + 1):
            nxt = dpoly.riccati_derivative(n + 1, a, alpha, beta)
            if nxt != current.derivative() * rhs_poly:
                return f"chain rule fails at n={n}, equation with a={a}"
            current = nxt
    return None


def check_riccati_specializes_to_q(depth: int, rng) -> str | None:
    for n in range(1, min(depth, 12) + 1):
        if dpoly.riccati_derivative(n, 1, 0, 1) != dpoly.derivative_polynomial(n + 1):
            return f"specialization fails at n={n}"
    return None


def check_root_counts(depth: int, rng) -> str | None:
    for n in range(1, min(depth, 12) + 1):
        brackets = dpoly.roots_in_unit_interval(dpoly.reduced_polynomial(n))
        if len(brackets) != n:
            return f"expected {n} roots, found {len(brackets)}"
    return None


def check_interlacing(depth: int, rng) -> str | None:
    for n in range(min(depth, 12) + 1):
        if not dpoly.interlacing_check(n):
            return f"interlacing fails at n={n}"
    return None


# ------------------------------------------------------------------- oracle

def check_gamma_functional_equation(depth: int, rng) -> str | None:
    for _ in range(20):
        s = complex(rng.uniform(0.5, 5.0), rng.uniform(-10.0, 10.0))
        lhs = oracles.gamma_ref(s + 1)
        rhs = s * oracles.gamma_ref(s)
        if abs(lhs - rhs) > 1e-12 * abs(lhs):
            return f"functional equation fails at s={s}"
    return None


def check_gamma_reflection(depth: int, rng) -> str | None:
    # Gamma(s+1) evaluates directly while Gamma(s) reflects, so the
    # functional equation across Re(s) = 0.5 ties both branches together
    count = 0
    while count < 12:
        s = complex(rng.uniform(-0.45, 0.45), rng.uniform(-4.0, 4.0))
        if abs(s) < 0.1:
            continue
        count += 1
        lhs = oracles.gamma_ref(s + 1)
        if abs(lhs - s * oracles.gamma_ref(s)) > 1e-12 * abs(lhs):
            return f"reflection-side functional equation fails at s={s}"
    return None


def check_eta_zeta_relation(depth: int, rng) -> str | None:
    for _ in range(20):
        s = complex(rng.uniform(0.3, 4.0), rng.uniform(-8.0, 8.0))
        if abs(s - 1) < 0.25:
            continue
        lhs = oracles.eta_ref(s)
        rhs = (1 - 2 ** (1 - s)) * oracles.zeta_ref(s)
        if abs(lhs - rhs) > 1e-12 * max(1.0, abs(lhs)):
            return f"eta/zeta relation fails at s={s}"
    return None


def check_eta_acceleration_orders(depth: int, rng) -> str | None:
    for s in (0.5, 0.75, 2 + 1j):
        one = oracles.eta_ref(s, acceleration_order=40)
        two = oracles.eta_ref(s, acceleration_order=56)
        if abs(one - two) > 1e-12 * max(1.0, abs(one)):
            return f"acceleration orders disagree at s={s}"
    return None


def check_gamma_integral_quadrature(depth: int, rng) -> str | None:
    for s in (0.5, 1.0, 2.25):
        quad = oracles.gamma_integral_ref(s)
        target = oracles.gamma_ref(s + 1)
        if abs(quad.value - target) > 1e-9 * abs(target):
            return f"integral of (-log(1-t))^s misses Gamma(s+1) at s={s}"
    return None


def check_by_parts_chain(depth: int, rng) -> str | None:
    s = 1.5
    target = oracles.eta_ref(s) * oracles.gamma_ref(s)
    for n in range(4):
        got = oracles.integrated_by_parts_form(s, n)
        if abs(got.value - target) > 1e-8 * abs(target):
            return f"integrated-by-parts form fails at n={n}"
    return None


def check_elementary_quadratures(depth: int, rng) -> str | None:
    third = oracles.quad_tanh_sinh(lambda t: t**2, 0.0, 1.0)
    if abs(third.value - Fraction(1, 3)) > 1e-11:
        return "int_0^1 t^2 dt missed 1/3"
    # int_0^{1/2} (1-2x)^3 dx = 1/8
    pow3 = oracles.quad_tanh_sinh(lambda x: (1 - 2 * x) ** 3, 0.0, 0.5)
    if abs(pow3.value - 0.125) > 1e-11:
        return "int_0^{1/2} (1-2x)^3 dx missed 1/8"
    return None


# ----------------------------------------------------------------- integral

def check_integral_identity(depth: int, rng) -> str | None:
    for n in range(min(depth, 12) + 1):
        for s in (0.75, 1.5):
            report = oracles.integral_identity_check(s, n)
            if report.rel_discrepancy > 1e-8:
                return (
                    f"identity off by {report.rel_discrepancy:.2e} "
                    f"at n={n}, s={s}"
                )
    return None


def check_eta_integral_quadrature(depth: int, rng) -> str | None:
    for s in (0.5, 1.0, 2.0):
        quad = oracles.eta_integral_ref(s)
        target = oracles.eta_ref(s) * oracles.gamma_ref(s)
        if abs(quad.value - target) > 1e-10 * max(1.0, abs(target)):
            return f"defining integral misses eta(s)Gamma(s) at s={s}"
    return None


SUITES: dict[str, list[tuple[str, Callable]]] = {
    "stirling": [
        ("stirling1_row_sums", check_stirling1_row_sums),
        ("eulerian_row_sums_and_symmetry", check_eulerian_row_sums_and_symmetry),
        ("stirling1_telescoped", check_stirling1_telescoped),
        ("stirling1_generating_function", check_stirling1_generating_function),
        ("rising_equals_shifted_falling", check_rising_equals_shifted_falling),
    ],
    "bell": [
        ("partial_bell_boundaries", check_partial_bell_boundaries),
        ("partial_bell_vs_enumeration", check_partial_bell_vs_enumeration),
        ("series_pow_integer_powers", check_series_pow_integer_powers),
        ("series_pow_roundtrip", check_series_pow_roundtrip),
        ("potential_poly_squared_series", check_potential_poly_squared_series),
    ],
    "c": [
        ("c_direct_equals_recurrence", check_c_direct_equals_recurrence),
        ("c_diagonal_double_factorial", check_c_diagonal_double_factorial),
        ("c_first_column_factorial", check_c_first_column_factorial),
        ("c_bell_identity", check_c_bell_identity),
        ("gamma_path_equivalence", check_gamma_path_equivalence),
        ("gamma_integrand_power_identity", check_gamma_integrand_power_identity),
        ("gamma_known_values", check_gamma_known_values),
    ],
    "ml": [
        ("ml_table_equals_telescoped", check_ml_table_equals_telescoped),
        ("ml_parity_and_boundaries", check_ml_parity_and_boundaries),
        ("ml_diagonal_and_divisibility", check_ml_diagonal_and_divisibility),
        ("ml_generating_function", check_ml_generating_function),
        ("ml_bateman_recurrence", check_ml_bateman_recurrence),
    ],
    "b": [
        ("b_direct_equals_recurrence", check_b_direct_equals_recurrence),
        ("b_first_column", check_b_first_column),
        ("b_bell_identity", check_b_bell_identity),
        ("zeta_path_equivalence", check_zeta_path_equivalence),
        ("zeta_integrand_power_identity", check_zeta_integrand_power_identity),
        ("zeta_target_convergence", check_zeta_target_convergence),
    ],
    "poly": [
        ("q_closed_forms", check_q_closed_forms),
        ("q_divisibility", check_q_divisibility),
        ("riccati_chain", check_riccati_chain),
        ("riccati_specializes_to_q", check_riccati_specializes_to_q),
        ("root_counts", check_root_counts),
        ("interlacing", check_interlacing),
    ],
    "oracle": [
        ("gamma_functional_equation", check_gamma_functional_equation),
        ("gamma_reflection", check_gamma_reflection),
        ("eta_zeta_relation", check_eta_zeta_relation),
        ("eta_acceleration_orders", check_eta_acceleration_orders),
        ("gamma_integral_quadrature", check_gamma_integral_quadrature),
        ("by_parts_chain", check_by_parts_chain),
        ("elementary_quadratures", check_elementary_quadratures),
    ],
    "integral": [
        ("integral_identity", check_integral_identity),
        ("eta_integral_quadrature", check_eta_integral_quadrature),
    ],
}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(
    suite: str, depth: int, seed: int = DEFAULT_SEED, threads: int | None = None
) -> list[CheckResult]:
    """Run one suite (or "all"); results come back in registry order.

    ``threads`` defaults to the THREADS environment variable (1 = serial).
    """
    if suite == "all":
        selected = [(s, name, fn) for s in SUITES for name, fn in SUITES[s]]
    elif suite in SUITES:
        selected = [(suite, name, fn) for name, fn in SUITES[suite]]
    else:
        raise ValueError(f"unknown suite {suite!r}")
    if threads is None:
        try:
            threads = int(os.environ.get("THREADS", "1"))
        except ValueError:
            threads = 1

    def run_one(item) -> CheckResult:
        suite_name, name, fn = item
        rng = random.Random(f"{seed}:{suite_name}:{name}")
        try:
            witness = fn(depth, rng)
        except Exception as exc:  # a raised defect is a failing check
            witness = f"{type(exc).__name__}: {exc}"
        return CheckResult(suite_name, name, witness is None, witness)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run_one, selected))
    return [run_one(item) for item in selected]
