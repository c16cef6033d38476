"""Dense univariate polynomials over exact coefficient rings.

Coefficients may be plain ints, Fractions, or GaussianRational values;
arithmetic never leaves the exact ring. Evaluation accepts anything the
coefficients can multiply with (Fraction grid points for sign scans,
complex for numeric work).
"""

from __future__ import annotations

from fractions import Fraction


class GaussianRational:
    """Exact complex number with rational real and imaginary parts.

    Just enough ring structure (+, -, *) for polynomial coefficients
    arising from complex-conjugate quadratic roots.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


class Polynomial:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zero coefficients are stripped so ``degree`` is honest.
    The zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x_minus(cls, c) -> "Polynomial":
        """The monic linear polynomial x - c."""
        return cls((-c, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if not self or not other:
            return Polynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        return Polynomial(tuple(a * c for a in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_down(self) -> "Polynomial":
        """Exact division by x; the constant term must vanish."""
        if self.coeffs and self.coeffs[0]:
            raise ValueError("constant term is nonzero; not divisible by x")
        return Polynomial(self.coeffs[1:])

    def div_linear(self, c) -> "Polynomial":
        """Exact division by (x - c); raises if the remainder is nonzero."""
        if not self:
            return Polynomial.zero()
        d = self.degree
        quot = [0] * d
        carry = self.coeffs[d]
        for i in range(d - 1, -1, -1):
            quot[i] = carry
            carry = self.coeffs[i] + c * carry
        if carry:
            raise ValueError(f"nonzero remainder {carry!r} dividing by (x - {c!r})")
        return Polynomial(quot)

    def eval_int_scaled(self, num: int, den: int) -> int:
        """Integer N = den**degree * p(num/den), exact for int coefficients.

        sign(N) = sign(p(num/den)), so sign tests on rational grid points
        never touch floating point.
        """
        out = 0
        power = 1
        for c in reversed(self.coeffs):
            out = out * num + c * power
            power *= den
        return out

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "Polynomial(" + " + ".join(terms) + ")"
