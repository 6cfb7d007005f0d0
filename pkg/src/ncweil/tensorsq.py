"""Graded tensor powers of a PBW algebra.

A ``TensorElement`` with k legs is a linear combination of k-tuples of
PBW monomials.  Multiplication carries the Koszul sign: moving the
j-th factor of the right operand past the i-th factor of the left one
(i > j) costs (-1)^(|a_i||b_j|).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigurationError
from .pbw import Algebra, AlgebraElement, EMPTY, monomial_parity
from .scalars import GaussRational, TruncSeries


class TensorElement:
    __slots__ = ("algebra", "legs", "terms")

    def __init__(self, algebra: Algebra, legs: int, terms=None):
        self.algebra = algebra
        self.legs = legs
        self.terms = terms if terms is not None else {}

    # -- constructors ----------------------------------------------------------

    @classmethod
    def unit(cls, algebra, legs):
        return cls(algebra, legs, {(EMPTY,) * legs: TruncSeries.one(algebra.order)})

    @classmethod
    def zero(cls, algebra, legs):
        return cls(algebra, legs, {})

    @classmethod
    def from_factors(cls, *factors):
        """Tensor product of AlgebraElements (no signs: this is placement,
        not multiplication)."""
        alg = factors[0].algebra
        terms = {(): TruncSeries.one(alg.order)}
        for f in factors:
            new = {}
            for key, c in terms.items():
                for m, c2 in f.terms.items():
                    new[key + (m,)] = c * c2
            terms = new
        return cls(alg, len(factors), {k: c for k, c in terms.items() if not c.is_zero()})

    def _prune(self):
        self.terms = {k: c for k, c in self.terms.items() if not c.is_zero()}
        return self

    def _check(self, other):
        if self.legs != other.legs:
            raise ConfigurationError("tensor leg counts differ")
        if self.algebra.basis is not other.algebra.basis or self.algebra.order != other.algebra.order:
            raise ConfigurationError("tensor elements over different algebras")

    # -- linear structure ----------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            out[k] = c if prev is None else prev + c
        return TensorElement(self.algebra, self.legs, out)._prune()

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            out[k] = -c if prev is None else prev - c
        return TensorElement(self.algebra, self.legs, out)._prune()

    def __neg__(self):
        return TensorElement(
            self.algebra, self.legs, {k: -c for k, c in self.terms.items()}
        )

    def scale(self, s):
        if isinstance(s, TruncSeries):
            return TensorElement(
                self.algebra, self.legs, {k: c * s for k, c in self.terms.items()}
            )._prune()
        return TensorElement(
            self.algebra, self.legs, {k: c.scalar_mul(s) for k, c in self.terms.items()}
        )._prune()

    # -- multiplication ----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, TruncSeries)):
            return self.scale(other)
        self._check(other)
        alg = self.algebra
        out = {}
        for ka, ca in self.terms.items():
            pa = [monomial_parity(m) for m in ka]
            for kb, cb in other.terms.items():
                pb = [monomial_parity(m) for m in kb]
                sign_exp = 0
                for i in range(1, self.legs):
                    if pa[i]:
                        for j in range(i):
                            sign_exp += pb[j]
                c = ca * cb
                if sign_exp % 2:
                    c = -c
                if c.is_zero():
                    continue
                # leg-wise PBW products, distributing over their normal forms
                partial = {(): c}
                for leg in range(self.legs):
                    nf = alg.mono_mul(ka[leg], kb[leg])
                    new = {}
                    for key, cc in partial.items():
                        for m, cm in nf.items():
                            cc2 = cc.scalar_mul(cm)
                            prev = new.get(key + (m,))
                            new[key + (m,)] = cc2 if prev is None else prev + cc2
                    partial = new
                for key, cc in partial.items():
                    prev = out.get(key)
                    out[key] = cc if prev is None else prev + cc
        return TensorElement(alg, self.legs, out)._prune()

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    # -- leg surgery -------------------------------------------------------------

    def swap_legs(self, i=0, j=1, graded=False):
        """Transpose two legs; plain by default (the _21 of Hopf formulas)."""
        out = {}
        for key, c in self.terms.items():
            lk = list(key)
            if graded and monomial_parity(lk[i]) and monomial_parity(lk[j]):
                c = -c
            lk[i], lk[j] = lk[j], lk[i]
            k2 = tuple(lk)
            prev = out.get(k2)
            out[k2] = c if prev is None else prev + c
        return TensorElement(self.algebra, self.legs, out)._prune()

    def map_leg(self, leg, fn, new_legs_of_result):
        """Substitute one leg through a linear map.

        ``fn`` takes an AlgebraElement (a single monomial) and returns an
        AlgebraElement (if new_legs_of_result == 1) or TensorElement.
        """
        alg = self.algebra
        out = {}
        for key, c in self.terms.items():
            img = fn(AlgebraElement(alg, {key[leg]: TruncSeries.one(alg.order)}))
            items = (
                img.terms.items()
                if isinstance(img, TensorElement)
                else [((m,), cc) for m, cc in img.terms.items()]
            )
            for sub, cc in items:
                k2 = key[:leg] + tuple(sub) + key[leg + 1 :]
                c2 = c * cc
                prev = out.get(k2)
                out[k2] = c2 if prev is None else prev + c2
        return TensorElement(alg, self.legs - 1 + new_legs_of_result, out)._prune()

    def embed(self, legs, positions):
        """Place this element into a wider identity-padded tensor space.

        positions: for each of self's legs, its index among ``legs``.
        """
        out = {}
        for key, c in self.terms.items():
            k2 = [EMPTY] * legs
            for src, dst in enumerate(positions):
                k2[dst] = key[src]
            out[tuple(k2)] = c
        return TensorElement(self.algebra, legs, out)

    def contract_pair(self, fn_left=None, fn_right=None):
        """m((fn_left or id) (x) (fn_right or id)) on a 2-leg element."""
        alg = self.algebra
        out = alg.zero()
        for (m1, m2), c in self.terms.items():
            left = AlgebraElement(alg, {m1: TruncSeries.one(alg.order)})
            if fn_left is not None:
                left = fn_left(left)
            right = AlgebraElement(alg, {m2: TruncSeries.one(alg.order)})
            if fn_right is not None:
                right = fn_right(right)
            out = out + (left * right).scale(c)
        return out

    def contract_pair_right(self, fn_right):
        return self.contract_pair(fn_right=fn_right)

    def __repr__(self):
        from .pbw import monomial_name

        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            name = " (x) ".join(monomial_name(self.algebra, m) for m in key)
            parts.append("(%s)*[%s]" % (self.terms[key], name))
        return " + ".join(parts)


def tensor_exp(x: TensorElement) -> TensorElement:
    """Sum x^k / k! to the truncation order; needs theta-multiple x."""
    from .errors import DomainError

    for c in x.terms.values():
        if not c.constant_term().is_zero():
            raise DomainError("tensor exponential needs a theta-multiple exponent")
    result = TensorElement.unit(x.algebra, x.legs)
    term = TensorElement.unit(x.algebra, x.legs)
    for k in range(1, x.algebra.order + 1):
        term = term * x
        term = term.scale(GaussRational(1, 0, k))
        if term.is_zero():
            break
        result = result + term
    return result
