"""Independent high-accuracy references the expansions are tested against.

Nothing here shares code with the series evaluators: Gamma comes from a
Lanczos approximation, eta from Borwein's accelerated alternating
series, and the integral identities from double-exponential quadrature.
The oracles are themselves self-tested (functional equation, reflection,
eta/zeta relation, elementary integrals) rather than trusted blindly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinatorics import rising_factorial
from .derivative_polynomials import derivative_polynomial, reduced_polynomial
from .report import BudgetExceededError, DomainError, PoleProximityError

# Godfrey's Lanczos coefficient set: g = 607/128, 15 coefficients.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEFFS = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
)


def gamma_ref(s) -> complex:
    """Gamma(s) by Lanczos approximation, reflection for Re(s) < 0.5.

    Relative accuracy is around 1e-13 for |s| <= 20; the verify suite
    asserts the functional equation rather than assuming this.
    """
    s = complex(s)
    if s.imag == 0.0 and s.real <= 0 and s.real == int(s.real):
        raise PoleProximityError(f"Gamma pole at s = {int(s.real)}")
    if s.real < 0.5:
        # Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return math.pi / (cmath.sin(math.pi * s) * gamma_ref(1 - s))
    z = s - 1
    acc = complex(_LANCZOS_COEFFS[0])
    for i in range(1, len(_LANCZOS_COEFFS)):
        acc += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * acc


def _borwein_weights(n: int) -> tuple[list[int], int]:
    # d_k = n sum_{i=0..k} (n+i-1)! 4**i / ((n-i)! (2i)!), all integers
    ds = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(factorial(n + i - 1) * 4**i, factorial(n - i) * factorial(2 * i))
        ds.append(int(n * acc))
    return ds, ds[n]


def eta_ref(s, acceleration_order: int | None = None) -> complex:
    """Dirichlet eta by Borwein's alternating-series acceleration.

    Valid for Re(s) > 0; accuracy better than 1e-12 for Re(s) >= 0.3,
    |Im(s)| <= 30 at the default order, which grows with |Im(s)|.
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError("eta oracle requires Re(s) > 0")
    n = acceleration_order or (36 + int(2.4 * abs(s.imag)))
    ds, dn = _borwein_weights(n)
    acc = 0j
    for k in range(n):
        term = (dn - ds[k]) / complex(k + 1) ** s
        acc += term if k % 2 == 0 else -term
    return acc / dn


def zeta_ref(s) -> complex:
    """Riemann zeta as eta(s) / (1 - 2**(1-s)); s = 1 is a pole."""
    s = complex(s)
    denom = 1 - 2 ** (1 - s)
    if abs(denom) < 1e-14:
        raise PoleProximityError("zeta is singular where 1 - 2**(1-s) vanishes")
    return eta_ref(s) / denom


@dataclass
class QuadratureResult:
    value: complex
    error_estimate: float
    evaluations: int
    converged: bool


DEFAULT_QUAD_TOL = 1e-10
DEFAULT_QUAD_BUDGET = 2_000_000
_T_MAX = 6.2  # node weights underflow beyond this in either map


def quad_tanh_sinh(
    f,
    a: float,
    b: float,
    tol: float = DEFAULT_QUAD_TOL,
    budget: int = DEFAULT_QUAD_BUDGET,
    max_level: int = 12,
) -> QuadratureResult:
    """Integrate f over the finite interval (a, b), tanh-sinh map.

    Endpoints are never sampled, and abscissas approach them
    double-exponentially, so integrable endpoint singularities
    (log blow-ups, t**p with p > -1) converge cleanly. Near the left
    endpoint the abscissa is formed as a + delta with delta computed
    stably, so put the harder singularity at ``a`` when there is a
    choice. Complex integrand values are welcome.

    ``tol`` is measured against max(1, |integral|); ``error_estimate``
    in the result is the absolute level-to-level difference.
    """
    if not a < b:
        raise ValueError("requires a < b")
    half = 0.5 * (b - a)
    evals = 0

    def node_sum(ts: list[float]) -> complex:
        nonlocal evals
        acc = 0j
        piov2 = math.pi / 2
        for t in ts:
            u = piov2 * math.sinh(t)
            if u > 350.0:
                continue  # weight underflows
            e = math.exp(-2.0 * u)
            delta = half * 2.0 * e / (1.0 + e)
            w = half * piov2 * math.cosh(t) * 4.0 * e / (1.0 + e) ** 2
            if w == 0.0 or delta == 0.0:
                continue
            if t == 0.0:
                points = [a + half]
                weight = w
            else:
                points = [a + delta, b - delta]
                weight = w
            for x in points:
                if not (a < x < b):
                    continue
                v = complex(f(x))
                evals += 1
                if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                    raise DomainError(f"integrand not finite at x = {x!r}")
                acc += weight * v
        return acc

    h = 1.0
    ts = [0.0] + [k * h for k in range(1, int(_T_MAX / h) + 1)]
    total = node_sum(ts) * h
    err = math.inf
    for _ in range(max_level):
        h /= 2
        new = node_sum([k * h for k in range(1, int(_T_MAX / h) + 1, 2)])
        refined = total / 2 + new * h
        err = abs(refined - total)
        total = refined
        if err <= tol * max(1.0, abs(total)):
            return QuadratureResult(total, err, evals, True)
        if evals > budget:
            break
    return QuadratureResult(total, err, evals, False)


def quad_exp_sinh(
    f,
    a: float = 0.0,
    tol: float = DEFAULT_QUAD_TOL,
    budget: int = DEFAULT_QUAD_BUDGET,
    max_level: int = 12,
) -> QuadratureResult:
    """Integrate f over (a, inf); f must decay at least exponentially."""
    evals = 0

    def node_sum(ts: list[float]) -> complex:
        nonlocal evals
        acc = 0j
        piov2 = math.pi / 2
        for t in ts:
            for sgn in ((1.0,) if t == 0.0 else (1.0, -1.0)):
                u = piov2 * math.sinh(sgn * t)
                if u > 690.0:
                    continue  # abscissa overflows; decaying f contributes nothing
                ex = math.exp(u)
                if ex == 0.0:
                    continue  # abscissa collapsed onto the endpoint
                x = a + ex
                w = piov2 * math.cosh(t) * ex
                if w == 0.0:
                    continue
                v = complex(f(x))
                evals += 1
                if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                    raise DomainError(f"integrand not finite at x = {x!r}")
                acc += w * v
        return acc

    h = 1.0
    total = node_sum([k * h for k in range(0, int(_T_MAX / h) + 1)]) * h
    err = math.inf
    for _ in range(max_level):
        h /= 2
        new = node_sum([k * h for k in range(1, int(_T_MAX / h) + 1, 2)])
        refined = total / 2 + new * h
        err = abs(refined - total)
        total = refined
        if err <= tol * max(1.0, abs(total)):
            return QuadratureResult(total, err, evals, True)
        if evals > budget:
            break
    return QuadratureResult(total, err, evals, False)


def quad_adaptive(f, a: float, b: float, tol: float = DEFAULT_QUAD_TOL,
                  budget: int = DEFAULT_QUAD_BUDGET) -> QuadratureResult:
    """Dispatch on the interval: tanh-sinh for finite (a, b), exp-sinh
    when b is infinite."""
    if math.isinf(b):
        return quad_exp_sinh(f, a, tol=tol, budget=budget)
    return quad_tanh_sinh(f, a, b, tol=tol, budget=budget)


def gamma_integral_ref(s, tol: float = 1e-11) -> QuadratureResult:
    """Quadrature of the defining integral of Gamma(s+1):

        int_0^1 (-log(1-t))**s dt = int_0^1 (-log u)**s du,

    the substitution placing the log singularity at the stable endpoint.
    """
    s = complex(s)
    if s.real <= -1:
        raise DomainError("integral converges only for Re(s) > -1")

    def integrand(u: float) -> complex:
        return (-math.log(u)) ** s

    return quad_tanh_sinh(integrand, 0.0, 1.0, tol=tol)


def eta_integral_ref(s, tol: float = 1e-11) -> QuadratureResult:
    """Quadrature of the defining integral int_0^inf t**(s-1)/(1+e^t) dt,
    whose value is eta(s)Gamma(s).

    The integrand is evaluated as exp((s-1) log t - t)/(1 + e^{-t}) so
    neither factor overflows at either end of the half line.
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError("integral converges only for Re(s) > 0")

    def integrand(t: float) -> complex:
        return cmath.exp((s - 1) * cmath.log(t) - t) / (1.0 + math.exp(-t))

    return quad_exp_sinh(integrand, 0.0, tol=tol)


def integrated_by_parts_form(s, n: int, tol: float = 1e-11) -> QuadratureResult:
    """eta(s)Gamma(s) recovered from the n-times integrated-by-parts
    integral: (-1)**(n+1)/s^(n+1 rising) int_0^inf t**(s+n) Q_{n+2}(x(t)) dt
    with x(t) = 1/(1+e^t).

    Q_{n+2} has no constant term, so Q_{n+2}(x(t)) decays like e^{-t};
    writing the integrand as exp((s+n) log t - t) times the bounded
    factor e^t Q_{n+2}(x(t)) keeps every intermediate finite.
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError("requires Re(s) > 0")
    reduced = derivative_polynomial(n + 2).shift_down()  # Q_{n+2}(x)/x
    rc = [complex(c) for c in reduced.coeffs]

    def integrand(t: float) -> complex:
        e = math.exp(-t)
        x = e / (1.0 + e)
        acc = 0j
        for c in reversed(rc):
            acc = acc * x + c
        # e^t * Q(x) = e^t x * (Q(x)/x) = acc/(1+e^{-t})
        return cmath.exp((s + n) * cmath.log(t) - t) * acc / (1.0 + e)

    res = quad_exp_sinh(integrand, 0.0, tol=tol)
    scale = (-1) ** (n + 1) / rising_factorial(s, n + 1)
    return QuadratureResult(res.value * scale, res.error_estimate * abs(scale),
                            res.evaluations, res.converged)


@dataclass
class IdentityCheckReport:
    s: complex
    n: int
    lhs: complex
    rhs: complex
    abs_discrepancy: float
    rel_discrepancy: float
    quadrature: QuadratureResult


def integral_identity_check(s, n: int, tol: float = DEFAULT_QUAD_TOL,
                            budget: int = DEFAULT_QUAD_BUDGET) -> IdentityCheckReport:
    """Check the reduced-polynomial integral identity

        2**(1-s-n) (-1)**n int_0^{1/2} (log((1-x)/x))**(s+n) P_n(x) dx
            = s^(n+1 rising) / 2**(s+n-1) * eta(s) Gamma(s).

    The left side is integrated after the substitution x = 1/(1+e^v),
    which maps (0, 1/2) to (0, inf) and turns the logarithmic endpoint
    into plain exponential decay:

        int_0^inf v**(s+n) P_n(1/(1+e^v)) e^{-v}/(1+e^{-v})**2 dv.

    Raises BudgetExceededError when the quadrature cannot reach ``tol``
    within ``budget`` evaluations.
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError("identity requires Re(s) > 0")
    if n < 0:
        raise ValueError("n must be nonnegative")
    pc = [complex(c) for c in reduced_polynomial(n).coeffs]

    def integrand(v: float) -> complex:
        e = math.exp(-v)
        x = e / (1.0 + e)
        acc = 0j
        for c in reversed(pc):
            acc = acc * x + c
        # v**(s+n) e^{-v} folded into one exp so neither factor overflows
        return cmath.exp((s + n) * cmath.log(v) - v) * acc / (1.0 + e) ** 2

    quad = quad_exp_sinh(integrand, 0.0, tol=tol, budget=budget)
    if not quad.converged:
        raise BudgetExceededError(
            f"quadrature stalled at error {quad.error_estimate:.3e} "
            f"after {quad.evaluations} evaluations"
        )
    lhs = 2 ** (1 - s - n) * (-1) ** n * quad.value
    rhs = rising_factorial(s, n + 1) / 2 ** (s + n - 1) * (
        eta_ref(s) * gamma_ref(s)
    )
    abs_d = abs(lhs - rhs)
    rel_d = abs_d / abs(rhs) if rhs else math.inf
    return IdentityCheckReport(s, n, lhs, rhs, abs_d, rel_d, quad)
