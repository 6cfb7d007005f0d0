"""Pure-Python backend for the exact scalar ring.

Two types live here:

* ``GaussRational`` -- exact elements a/d + (b/d) i of the Gaussian
  rationals, stored over a common positive denominator with
  gcd(a, b, d) = 1 so equality and hashing are structural.
* ``TruncSeries`` -- polynomials in the single deformation parameter
  truncated at a fixed order N, with GaussRational coefficients.  All
  arithmetic is modulo theta^(N+1).

A Cython twin of this module (``_speedups.pyx``) implements the same
API; ``ncweil.scalars`` picks one at import time.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _normalize(a: int, b: int, d: int):
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return a, b, d


class GaussRational:
    """a/d + (b/d)*i with integer a, b and positive integer d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        if isinstance(a, Fraction) or isinstance(b, Fraction) or isinstance(d, Fraction):
            fa, fb, fd = Fraction(a), Fraction(b), Fraction(d)
            den = fa.denominator * fb.denominator * fd.denominator
            fa, fb, fd = fa * den, fb * den, fd * den
            a, b, d = int(fa), int(fb), int(fd)
        self.a, self.b, self.d = _normalize(a, b, d)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_fractions(cls, re, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator
        return cls(re.numerator * im.denominator, im.numerator * re.denominator, d)

    @classmethod
    def _raw(cls, a, b, d):
        obj = cls.__new__(cls)
        obj.a, obj.b, obj.d = _normalize(a, b, d)
        return obj

    # -- views ---------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_one(self) -> bool:
        return self.b == 0 and self.a == self.d

    # -- ring ops -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational._raw(
            self.a * other.d + other.a * self.d,
            self.b * other.d + other.b * self.d,
            self.d * other.d,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational._raw(
            self.a * other.d - other.a * self.d,
            self.b * other.d - other.b * self.d,
            self.d * other.d,
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational._raw(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d * other.d,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussRational._raw(-self.a, -self.b, self.d)

    def inverse(self):
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero GaussRational")
        return GaussRational._raw(self.a * self.d, -self.b * self.d, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self):
        return GaussRational._raw(self.a, -self.b, self.d)

    # -- protocol --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.d) == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.b == 0:
            return str(Fraction(self.a, self.d))
        if self.a == 0:
            return "%s*i" % Fraction(self.b, self.d)
        return "(%s%s%s*i)" % (
            Fraction(self.a, self.d),
            "+" if self.b > 0 else "-",
            abs(Fraction(self.b, self.d)),
        )


def _coerce(x):
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, int):
        return GaussRational._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return GaussRational._raw(x.numerator, 0, x.denominator)
    return NotImplemented


GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)


class TruncSeries:
    """Coefficient list c[0..N] of a series truncated at order N."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = tuple(c if isinstance(c, GaussRational) else _coerce(c) for c in coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs = coeffs + (GR_ZERO,) * (order + 1 - len(coeffs))
        elif len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        self.coeffs = coeffs
        self.order = order

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, value, order):
        c = value if isinstance(value, GaussRational) else _coerce(value)
        return cls((c,) + (GR_ZERO,) * order, order)

    @classmethod
    def zero(cls, order):
        return cls((GR_ZERO,) * (order + 1), order)

    @classmethod
    def one(cls, order):
        return cls.constant(GR_ONE, order)

    @classmethod
    def theta(cls, order, power=1):
        cs = [GR_ZERO] * (order + 1)
        if power <= order:
            cs[power] = GR_ONE
        return cls(cs, order)

    # -- helpers ----------------------------------------------------------

    def _check(self, other):
        from ..errors import ConfigurationError

        if self.order != other.order:
            raise ConfigurationError(
                "truncation orders differ: %d vs %d" % (self.order, other.order)
            )

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0].is_one() and all(c.is_zero() for c in self.coeffs[1:])

    def constant_term(self) -> GaussRational:
        return self.coeffs[0]

    # -- ring ops ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce_series(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        return TruncSeries(
            tuple(x + y for x, y in zip(self.coeffs, other.coeffs)), self.order
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_series(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        return TruncSeries(
            tuple(x - y for x, y in zip(self.coeffs, other.coeffs)), self.order
        )

    def __rsub__(self, other):
        other = self._coerce_series(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return TruncSeries(tuple(-x for x in self.coeffs), self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            c = _coerce(other)
            return TruncSeries(tuple(x * c for x in self.coeffs), self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = GR_ZERO
            for j in range(k + 1):
                if not a[j].is_zero() and not b[k - j].is_zero():
                    acc = acc + a[j] * b[k - j]
            out.append(acc)
        return TruncSeries(tuple(out), n)

    __rmul__ = __mul__

    def scalar_mul(self, c):
        c = c if isinstance(c, GaussRational) else _coerce(c)
        return TruncSeries(tuple(x * c for x in self.coeffs), self.order)

    def exp(self):
        from ..errors import DomainError

        if not self.coeffs[0].is_zero():
            raise DomainError("exp needs zero constant term")
        result = TruncSeries.one(self.order)
        term = TruncSeries.one(self.order)
        for k in range(1, self.order + 1):
            term = term * self
            term = term.scalar_mul(GaussRational(1, 0, k))
            result = result + term
        return result

    def invert(self):
        from ..errors import DomainError

        c0 = self.coeffs[0]
        if c0.is_zero():
            raise DomainError("inverse needs a unit constant term")
        inv0 = c0.inverse()
        # x = c0(1 + t) with t nilpotent; 1/x = inv0 * sum (-t)^k
        t = self.scalar_mul(inv0) - TruncSeries.one(self.order)
        result = TruncSeries.one(self.order)
        power = TruncSeries.one(self.order)
        sign = GR_ONE
        for _ in range(self.order):
            power = power * t
            sign = -sign
            if power.is_zero():
                break
            result = result + power.scalar_mul(sign)
        return result.scalar_mul(inv0)

    def truncate_to_constant(self):
        """The theta -> 0 limit, kept in the same ring."""
        return TruncSeries.constant(self.coeffs[0], self.order)

    @staticmethod
    def _coerce_series(x):
        if isinstance(x, TruncSeries):
            return x
        return NotImplemented

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussRational)):
            return self == TruncSeries.constant(other, self.order)
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(repr(c))
            elif k == 1:
                parts.append("%s*th" % repr(c))
            else:
                parts.append("%s*th^%d" % (repr(c), k))
        if not parts:
            return "0"
        return " + ".join(parts)


BACKEND = "pure"
