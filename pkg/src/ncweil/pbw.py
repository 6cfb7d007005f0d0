"""Normal-form arithmetic in super enveloping algebras.

An ``Algebra`` fixes a ``SuperLieBasis``, a relation mode and a series
truncation order N; its elements are linear combinations of PBW
monomials with TruncSeries coefficients.

Relation modes:

* ``ENVELOPING`` -- rewrite by the bracket table as given (for the
  quadratic variant this keeps c as an honest central generator);
* ``WEIL``       -- quadratic variant with c evaluated to 1, so odd pairs
  rewrite to the scalar B_ab: the Clifford-flavoured algebra the
  deformed Weil construction lives in.

The rewriting is plain bracket insertion: a word is reduced by swapping
adjacent out-of-order letters (collecting the bracket) and contracting
repeated odd letters via x*x = [x,x]/2.  Each step lowers (length,
disorder) lexicographically, so it terminates; associativity is covered
by tests rather than a completion argument.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigurationError, DomainError, UnknownGeneratorError
from .liealg import SuperLieBasis
from .scalars import GR_ONE, GR_ZERO, GaussRational, TruncSeries

ENVELOPING = "enveloping"
WEIL = "weil"

_HALF = GaussRational(1, 0, 2)
_MINUS_ONE = GaussRational(-1)


class Algebra:
    def __init__(self, basis: SuperLieBasis, mode: str, order: int):
        if mode not in (ENVELOPING, WEIL):
            raise ConfigurationError("unknown relation mode %r" % mode)
        if mode == WEIL and basis.variant != "quadratic":
            raise ConfigurationError("WEIL mode needs the quadratic super basis")
        self.basis = basis
        self.mode = mode
        self.order = order
        self.c_idx = basis.c_index() if mode == WEIL else None
        self._mono_cache = {}
        self._word_cache = {}

    # -- generator data -----------------------------------------------------

    def parity(self, idx):
        return self.basis.gens[idx].parity

    def degree(self, idx):
        return self.basis.gens[idx].degree

    def active(self, idx):
        return not (self.mode == WEIL and idx == self.c_idx)

    def bracket(self, i, j):
        lin, const = self.basis.bracket(i, j)
        if self.mode == WEIL and self.c_idx is not None and self.c_idx in lin:
            lin = dict(lin)
            const = const + lin.pop(self.c_idx)
        return lin, const

    # -- element constructors ------------------------------------------------

    def zero(self):
        return AlgebraElement(self, {})

    def one(self):
        return AlgebraElement(self, {EMPTY: TruncSeries.one(self.order)})

    def gen(self, name_or_idx):
        idx = (
            self.basis.index(name_or_idx)
            if isinstance(name_or_idx, str)
            else name_or_idx
        )
        if not self.active(idx):
            raise UnknownGeneratorError("generator %s is evaluated out in WEIL mode"
                                        % self.basis.gens[idx].name)
        return self.from_monomial(monomial_of_gen(idx, self.parity(idx)))

    def from_monomial(self, mono, coeff=None):
        return AlgebraElement(
            self, {mono: coeff if coeff is not None else TruncSeries.one(self.order)}
        )

    def from_word(self, names, coeff=None):
        idxs = [
            self.basis.index(n) if isinstance(n, str) else n for n in names
        ]
        for i in idxs:
            if not 0 <= i < len(self.basis.gens):
                raise UnknownGeneratorError(str(i))
            if not self.active(i):
                raise UnknownGeneratorError("generator %s is evaluated out in WEIL mode"
                                            % self.basis.gens[i].name)
        nf = self.normal_form_word(tuple(idxs))
        out = {}
        scale = coeff if coeff is not None else TruncSeries.one(self.order)
        for mono, c in nf.items():
            out[mono] = scale.scalar_mul(c)
        return AlgebraElement(self, out)._prune()

    # -- rewriting engine ------------------------------------------------------

    def normal_form_word(self, word):
        """dict PbwMonomial -> GaussRational for a product of generators."""
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached
        out = {}
        stack = [(list(word), GR_ONE)]
        while stack:
            w, coef = stack.pop()
            k = _first_violation(self, w)
            if k is None:
                mono = _word_to_monomial(self, w)
                prev = out.get(mono)
                out[mono] = coef if prev is None else prev + coef
                continue
            x, y = w[k], w[k + 1]
            if x == y:
                # repeated odd letter: x*x = [x,x]/2
                lin, const = self.bracket(x, x)
                rest = w[:k] + w[k + 2 :]
                for z, c in lin.items():
                    stack.append((w[:k] + [z] + w[k + 2 :], coef * c * _HALF))
                if const:
                    stack.append((rest, coef * const * _HALF))
                continue
            sign = _MINUS_ONE if self.parity(x) and self.parity(y) else GR_ONE
            swapped = list(w)
            swapped[k], swapped[k + 1] = y, x
            stack.append((swapped, coef * sign))
            lin, const = self.bracket(x, y)
            for z, c in lin.items():
                stack.append((w[:k] + [z] + w[k + 2 :], coef * c))
            if const:
                stack.append((w[:k] + w[k + 2 :], coef * const))
        out = {m: c for m, c in out.items() if c}
        if len(self._word_cache) < 200000:
            self._word_cache[word] = out
        return out

    def mono_mul(self, m1, m2):
        key = (m1, m2)
        cached = self._mono_cache.get(key)
        if cached is None:
            word = monomial_to_word(m1) + monomial_to_word(m2)
            cached = self.normal_form_word(word)
            if len(self._mono_cache) < 200000:
                self._mono_cache[key] = cached
        return cached


EMPTY = ((), ())


def monomial_of_gen(idx, parity):
    if parity:
        return ((), (idx,))
    return (((idx, 1),), ())


def monomial_to_word(mono):
    even, odd = mono
    word = ()
    for idx, exp in even:
        word += (idx,) * exp
    return word + tuple(odd)


def _word_to_monomial(alg, w):
    even = []
    odd = []
    for idx in w:
        if alg.parity(idx):
            odd.append(idx)
        else:
            if even and even[-1][0] == idx:
                even[-1] = (idx, even[-1][1] + 1)
            else:
                even.append((idx, 1))
    return (tuple(even), tuple(odd))


def _first_violation(alg, w):
    for k in range(len(w) - 1):
        x, y = w[k], w[k + 1]
        if x > y:
            return k
        if x == y and alg.parity(x):
            return k
    return None


def monomial_parity(mono):
    return len(mono[1]) % 2


def monomial_filtration(alg, mono):
    even, odd = mono
    deg = 0
    for idx, exp in even:
        deg += alg.degree(idx) * exp
    for idx in odd:
        deg += alg.degree(idx)
    return deg


def monomial_weight(alg, mono):
    """Sum of generator weights; None if any factor has no weight."""
    even, odd = mono
    n = alg.basis.rank
    total = [Fraction(0)] * n
    for idx, exp in even:
        w = alg.basis.gens[idx].weight
        if w is None:
            return None
        for i in range(n):
            total[i] += w[i] * exp
    for idx in odd:
        w = alg.basis.gens[idx].weight
        if w is None:
            return None
        for i in range(n):
            total[i] += w[i]
    return tuple(total)


def monomial_name(alg, mono):
    even, odd = mono
    parts = []
    for idx, exp in even:
        nm = alg.basis.gens[idx].name
        parts.append(nm if exp == 1 else "%s^%d" % (nm, exp))
    for idx in odd:
        parts.append(alg.basis.gens[idx].name)
    return "*".join(parts) if parts else "1"


class AlgebraElement:
    """Linear combination of PBW monomials with TruncSeries coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def _prune(self):
        self.terms = {m: c for m, c in self.terms.items() if not c.is_zero()}
        return self

    def _check(self, other):
        if self.algebra is not other.algebra:
            if (
                self.algebra.basis is not other.algebra.basis
                or self.algebra.mode != other.algebra.mode
                or self.algebra.order != other.algebra.order
            ):
                raise ConfigurationError("elements from incompatible algebras")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
        return AlgebraElement(self.algebra, out)._prune()

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            out[m] = -c if prev is None else prev - c
        return AlgebraElement(self.algebra, out)._prune()

    def __neg__(self):
        return AlgebraElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def scale(self, s):
        if isinstance(s, TruncSeries):
            return AlgebraElement(
                self.algebra, {m: c * s for m, c in self.terms.items()}
            )._prune()
        return AlgebraElement(
            self.algebra, {m: c.scalar_mul(s) for m, c in self.terms.items()}
        )._prune()

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, TruncSeries)):
            return self.scale(other)
        self._check(other)
        alg = self.algebra
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                if c12.is_zero():
                    continue
                for m, c in alg.mono_mul(m1, m2).items():
                    contrib = c12.scalar_mul(c)
                    prev = out.get(m)
                    out[m] = contrib if prev is None else prev + contrib
        return AlgebraElement(alg, out)._prune()

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, TruncSeries)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure ---------------------------------------------------------------

    def parity(self):
        """0/1 if homogeneous, else raises."""
        ps = {monomial_parity(m) for m in self.terms}
        if not ps:
            return 0
        if len(ps) > 1:
            raise DomainError("element has mixed parity")
        return ps.pop()

    def filtration_degree(self):
        if not self.terms:
            raise DomainError("zero element has no filtration degree")
        return max(monomial_filtration(self.algebra, m) for m in self.terms)

    def weight(self):
        """Common weight of all monomials, None if mixed or undefined."""
        ws = set()
        for m in self.terms:
            w = monomial_weight(self.algebra, m)
            if w is None:
                return None
            ws.add(w)
        if len(ws) != 1:
            return None
        return ws.pop()

    def theta_zero(self):
        return AlgebraElement(
            self.algebra,
            {m: c.truncate_to_constant() for m, c in self.terms.items()},
        )._prune()

    def super_commutator(self, other):
        """[self, other] with the Koszul sign of the parities."""
        sign = -1 if (self.parity() and other.parity()) else 1
        xy = self * other
        yx = other * self
        return xy - yx if sign == 1 else xy + yx

    def coefficient(self, mono):
        return self.terms.get(mono, TruncSeries.zero(self.algebra.order))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            parts.append("(%s)*%s" % (self.terms[m], monomial_name(self.algebra, m)))
        return " + ".join(parts)


def ad_action(y: AlgebraElement, x: AlgebraElement) -> AlgebraElement:
    """Inner super-adjoint ad_y(x) = yx -+ xy, termwise in the parities."""
    alg = y.algebra
    out = alg.zero()
    for my, cy in y.terms.items():
        py = monomial_parity(my)
        ye = AlgebraElement(alg, {my: cy})
        for mx, cx in x.terms.items():
            px = monomial_parity(mx)
            xe = AlgebraElement(alg, {mx: cx})
            t = ye * xe
            s = xe * ye
            out = out + (t - s if not (py and px) else t + s)
    return out
