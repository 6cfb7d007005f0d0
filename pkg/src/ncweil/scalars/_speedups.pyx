# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython backend for the exact scalar ring.

Same semantics as ``_pure``: GaussRational over a common denominator,
TruncSeries modulo theta^(N+1).  Coefficients are Python ints (exact,
unbounded); the win over the pure backend comes from cdef classes,
C-level loops and skipping the Fraction machinery on the hot paths.
"""

from fractions import Fraction
from math import gcd as _gcd

from ..errors import ConfigurationError, DomainError

BACKEND = "cython"


cdef class GaussRational:
    cdef readonly object a
    cdef readonly object b
    cdef readonly object d

    def __init__(self, a=0, b=0, d=1):
        if isinstance(a, Fraction) or isinstance(b, Fraction) or isinstance(d, Fraction):
            fa, fb, fd = Fraction(a), Fraction(b), Fraction(d)
            den = fa.denominator * fb.denominator * fd.denominator
            a, b, d = int(fa * den), int(fb * den), int(fd * den)
        self._set(a, b, d)

    cdef _set(self, object a, object b, object d):
        cdef object g
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = _gcd(_gcd(a, b), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self.a, self.b, self.d = a, b, d

    @staticmethod
    cdef GaussRational raw(object a, object b, object d):
        cdef GaussRational r = GaussRational.__new__(GaussRational)
        r._set(a, b, d)
        return r

    @classmethod
    def _raw(cls, a, b, d):
        return GaussRational.raw(a, b, d)

    @classmethod
    def from_fractions(cls, re, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator
        return GaussRational.raw(re.numerator * im.denominator,
                                 im.numerator * re.denominator, d)

    @property
    def re(self):
        return Fraction(self.a, self.d)

    @property
    def im(self):
        return Fraction(self.b, self.d)

    cpdef bint is_zero(self):
        return self.a == 0 and self.b == 0

    cpdef bint is_one(self):
        return self.b == 0 and self.a == self.d

    def __add__(self, other):
        cdef GaussRational o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational.raw(self.a * o.d + o.a * self.d,
                                 self.b * o.d + o.b * self.d,
                                 self.d * o.d)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        cdef GaussRational o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational.raw(self.a * o.d - o.a * self.d,
                                 self.b * o.d - o.b * self.d,
                                 self.d * o.d)

    def __rsub__(self, other):
        cdef GaussRational o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        cdef GaussRational o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational.raw(self.a * o.a - self.b * o.b,
                                 self.a * o.b + self.b * o.a,
                                 self.d * o.d)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self):
        return GaussRational.raw(-self.a, -self.b, self.d)

    cpdef GaussRational inverse(self):
        cdef object n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero GaussRational")
        return GaussRational.raw(self.a * self.d, -self.b * self.d, n)

    def __truediv__(self, other):
        cdef GaussRational o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.__mul__(o.inverse())

    def __rtruediv__(self, other):
        cdef GaussRational o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__mul__(self.inverse())

    def conjugate(self):
        return GaussRational.raw(self.a, -self.b, self.d)

    def __richcmp__(self, other, int op):
        if op != 2 and op != 3:
            return NotImplemented
        cdef GaussRational o = _coerce(other)
        if o is None:
            return NotImplemented
        eq = self.a == o.a and self.b == o.b and self.d == o.d
        return eq if op == 2 else not eq

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return not (self.a == 0 and self.b == 0)

    def __repr__(self):
        if self.b == 0:
            return str(Fraction(self.a, self.d))
        if self.a == 0:
            return "%s*i" % Fraction(self.b, self.d)
        return "(%s%s%s*i)" % (Fraction(self.a, self.d),
                               "+" if self.b > 0 else "-",
                               abs(Fraction(self.b, self.d)))


cdef GaussRational _coerce(object x):
    if isinstance(x, GaussRational):
        return <GaussRational> x
    if isinstance(x, int):
        return GaussRational.raw(x, 0, 1)
    if isinstance(x, Fraction):
        return GaussRational.raw(x.numerator, 0, x.denominator)
    return None


GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)


cdef class TruncSeries:
    cdef readonly tuple coeffs
    cdef readonly int order

    def __init__(self, coeffs, order=None):
        cs = tuple(c if isinstance(c, GaussRational) else _coerce(c) for c in coeffs)
        cdef int n
        if order is None:
            n = len(cs) - 1
        else:
            n = order
        if n < 0:
            raise ValueError("truncation order must be >= 0")
        if len(cs) < n + 1:
            cs = cs + (GR_ZERO,) * (n + 1 - len(cs))
        elif len(cs) > n + 1:
            cs = cs[: n + 1]
        self.coeffs = cs
        self.order = n

    @staticmethod
    cdef TruncSeries raw(tuple coeffs, int order):
        cdef TruncSeries s = TruncSeries.__new__(TruncSeries)
        s.coeffs = coeffs
        s.order = order
        return s

    @classmethod
    def constant(cls, value, order):
        c = value if isinstance(value, GaussRational) else _coerce(value)
        return TruncSeries.raw((c,) + (GR_ZERO,) * order, order)

    @classmethod
    def zero(cls, order):
        return TruncSeries.raw((GR_ZERO,) * (order + 1), order)

    @classmethod
    def one(cls, order):
        return TruncSeries.constant(GR_ONE, order)

    @classmethod
    def theta(cls, order, power=1):
        cs = [GR_ZERO] * (order + 1)
        if power <= order:
            cs[power] = GR_ONE
        return TruncSeries.raw(tuple(cs), order)

    cdef _check(self, TruncSeries other):
        if self.order != other.order:
            raise ConfigurationError(
                "truncation orders differ: %d vs %d" % (self.order, other.order))

    cpdef bint is_zero(self):
        cdef Py_ssize_t k
        for k in range(len(self.coeffs)):
            if not (<GaussRational> self.coeffs[k]).is_zero():
                return False
        return True

    cpdef bint is_one(self):
        cdef Py_ssize_t k
        if not (<GaussRational> self.coeffs[0]).is_one():
            return False
        for k in range(1, len(self.coeffs)):
            if not (<GaussRational> self.coeffs[k]).is_zero():
                return False
        return True

    def constant_term(self):
        return self.coeffs[0]

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        cdef TruncSeries o = <TruncSeries> other
        self._check(o)
        cdef Py_ssize_t k
        cs = tuple((<GaussRational> self.coeffs[k]).__add__(o.coeffs[k])
                   for k in range(self.order + 1))
        return TruncSeries.raw(cs, self.order)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        cdef TruncSeries o = <TruncSeries> other
        self._check(o)
        cdef Py_ssize_t k
        cs = tuple((<GaussRational> self.coeffs[k]).__sub__(o.coeffs[k])
                   for k in range(self.order + 1))
        return TruncSeries.raw(cs, self.order)

    def __neg__(self):
        cs = tuple((<GaussRational> c).__neg__() for c in self.coeffs)
        return TruncSeries.raw(cs, self.order)

    def __mul__(self, other):
        cdef TruncSeries o
        cdef GaussRational c
        cdef Py_ssize_t k, j, n
        if isinstance(other, TruncSeries):
            o = <TruncSeries> other
            self._check(o)
            n = self.order
            out = []
            for k in range(n + 1):
                acc = GR_ZERO
                for j in range(k + 1):
                    x = <GaussRational> self.coeffs[j]
                    y = <GaussRational> o.coeffs[k - j]
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y
                out.append(acc)
            return TruncSeries.raw(tuple(out), n)
        c = _coerce(other)
        if c is None:
            return NotImplemented
        cs = tuple((<GaussRational> x) * c for x in self.coeffs)
        return TruncSeries.raw(cs, self.order)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scalar_mul(self, c):
        cdef GaussRational g = c if isinstance(c, GaussRational) else _coerce(c)
        cs = tuple((<GaussRational> x) * g for x in self.coeffs)
        return TruncSeries.raw(cs, self.order)

    def exp(self):
        if not (<GaussRational> self.coeffs[0]).is_zero():
            raise DomainError("exp needs zero constant term")
        result = TruncSeries.one(self.order)
        term = TruncSeries.one(self.order)
        cdef int k
        for k in range(1, self.order + 1):
            term = term * self
            term = term.scalar_mul(GaussRational(1, 0, k))
            result = result + term
        return result

    def invert(self):
        cdef GaussRational c0 = <GaussRational> self.coeffs[0]
        if c0.is_zero():
            raise DomainError("inverse needs a unit constant term")
        inv0 = c0.inverse()
        t = self.scalar_mul(inv0) - TruncSeries.one(self.order)
        result = TruncSeries.one(self.order)
        power = TruncSeries.one(self.order)
        sign = GR_ONE
        cdef int k
        for k in range(self.order):
            power = power * t
            sign = -sign
            if power.is_zero():
                break
            result = result + power.scalar_mul(sign)
        return result.scalar_mul(inv0)

    def truncate_to_constant(self):
        return TruncSeries.constant(self.coeffs[0], self.order)

    def __richcmp__(self, other, int op):
        if op != 2 and op != 3:
            return NotImplemented
        cdef TruncSeries o
        if isinstance(other, TruncSeries):
            o = <TruncSeries> other
        elif isinstance(other, (int, Fraction, GaussRational)):
            o = TruncSeries.constant(other, self.order)
        else:
            return NotImplemented
        eq = self.order == o.order and self.coeffs == o.coeffs
        return eq if op == 2 else not eq

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if (<GaussRational> c).is_zero():
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
