"""Hopf structure maps, abelian twist elements and the deformed structures.

Everything here is computed mechanically from the definitions: the
twisted coproduct is literal conjugation by the twist element in the
tensor square, the twisted antipode goes through U = chi1 * S(chi2),
the R-matrix through chi_21 * chi^(-1).  Closed-form expressions (the
lambda/q calculus on root generators) live in callers' tests as
oracles, never as the implementation.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigurationError, DomainError
from .pbw import (
    ENVELOPING,
    Algebra,
    AlgebraElement,
    EMPTY,
    monomial_parity,
    monomial_to_word,
)
from .scalars import GR_I, GR_ONE, GaussRational, TruncSeries
from .tensorsq import TensorElement, tensor_exp

_HALF_I = GaussRational(0, -1, 2)  # -i/2
_PLUS_HALF_I = GaussRational(0, 1, 2)  # +i/2


class HopfAlgebra:
    """Primitive-generator super Hopf structure on an enveloping algebra."""

    def __init__(self, algebra: Algebra):
        if algebra.mode != ENVELOPING:
            raise ConfigurationError(
                "coproduct/antipode live on the enveloping mode; the c=1 "
                "quotient is not a Hopf quotient"
            )
        self.algebra = algebra
        self._cop_cache = {}

    def coproduct(self, x: AlgebraElement) -> TensorElement:
        alg = self.algebra
        out = TensorElement.zero(alg, 2)
        for mono, c in x.terms.items():
            out = out + self._cop_mono(mono).scale(c)
        return out

    def _cop_mono(self, mono):
        cached = self._cop_cache.get(mono)
        if cached is not None:
            return cached
        alg = self.algebra
        t = TensorElement.unit(alg, 2)
        for idx in monomial_to_word(mono):
            g = alg.gen(idx)
            prim = TensorElement.from_factors(g, alg.one()) + TensorElement.from_factors(
                alg.one(), g
            )
            t = t * prim
        if len(self._cop_cache) < 100000:
            self._cop_cache[mono] = t
        return t

    def counit(self, x: AlgebraElement) -> TruncSeries:
        return x.coefficient(EMPTY)

    def antipode(self, x: AlgebraElement) -> AlgebraElement:
        alg = self.algebra
        out = alg.zero()
        for mono, c in x.terms.items():
            word = monomial_to_word(mono)
            ps = [alg.parity(i) for i in word]
            sign_exp = len(word)
            for i in range(len(word)):
                for j in range(i + 1, len(word)):
                    sign_exp += ps[i] * ps[j]
            coeff = c if sign_exp % 2 == 0 else -c
            out = out + alg.from_word(tuple(reversed(word)), coeff)
        return out

    def convolution_check(self, x: AlgebraElement) -> bool:
        """m(S (x) id) coproduct(x) == counit(x) 1."""
        alg = self.algebra
        got = self.coproduct(x).contract_pair(fn_left=self.antipode)
        want = alg.one().scale(self.counit(x))
        return got == want

    def coassociativity_defect(self, x: AlgebraElement):
        cop = self.coproduct(x)
        left = cop.map_leg(0, lambda e: self.coproduct(e), 2)
        right = cop.map_leg(1, lambda e: self.coproduct(e), 2)
        return left - right


def elem_exp(x: AlgebraElement) -> AlgebraElement:
    """Sum x^k/k! truncated; every coefficient of x must be a theta-multiple."""
    for c in x.terms.values():
        if not c.constant_term().is_zero():
            raise DomainError("element exponential needs a theta-multiple exponent")
    alg = x.algebra
    result = alg.one()
    term = alg.one()
    for k in range(1, alg.order + 1):
        term = term * x
        term = term.scale(GaussRational(1, 0, k))
        if term.is_zero():
            break
        result = result + term
    return result


def elem_invert(x: AlgebraElement) -> AlgebraElement:
    """Inverse of 1 + (theta-multiple): geometric series."""
    alg = x.algebra
    t = x - alg.one()
    for c in t.terms.values():
        if not c.constant_term().is_zero():
            raise DomainError("can only invert unit + theta-multiple elements")
    result = alg.one()
    power = alg.one()
    sign = 1
    for _ in range(alg.order):
        power = power * t
        sign = -sign
        if power.is_zero():
            break
        result = result + power.scale(GaussRational(sign))
    return result


class TwistData:
    """Abelian twist exp{-(i/2) theta J^{kl} H_k (x) H_l} and its calculus."""

    def __init__(self, hopf: HopfAlgebra, J, validate=True, _allow_symmetric=False):
        self.hopf = hopf
        alg = hopf.algebra
        self.algebra = alg
        basis = alg.basis
        p = len(J)
        if p > basis.rank:
            raise ConfigurationError("twist needs at most rank commuting generators")
        J = [[Fraction(x) for x in row] for row in J]
        if not _allow_symmetric:
            for k in range(p):
                for l in range(p):
                    if J[k][l] != -J[l][k]:
                        raise ConfigurationError("twist matrix must be antisymmetric")
        self.J = J
        self.p = p
        self.twist_gens = basis.cartan[:p]
        for i in self.twist_gens:
            for j in self.twist_gens:
                lin, const = basis.bracket(i, j)
                if lin or const:
                    raise ConfigurationError("twist generators must commute")
        th = TruncSeries.theta(alg.order)
        exponent = TensorElement.zero(alg, 2)
        for k in range(p):
            for l in range(p):
                if not J[k][l]:
                    continue
                coef = th.scalar_mul(_HALF_I * GaussRational(J[k][l].numerator, 0, J[k][l].denominator))
                exponent = exponent + TensorElement.from_factors(
                    alg.gen(self.twist_gens[k]), alg.gen(self.twist_gens[l])
                ).scale(coef)
        self.chi = tensor_exp(exponent)
        self.chi_inv = tensor_exp(-exponent)
        self._lambda_cache = {}
        self._q_cache = {}
        self._U = None
        self._U_inv = None
        if validate:
            if not (self.chi * self.chi_inv == TensorElement.unit(alg, 2)):
                raise DomainError("twist element is not invertible to this order")
            if not _allow_symmetric:
                self._validate_lambda_q()

    # -- scalar/group-like calculus ---------------------------------------------

    def lam(self, weight) -> AlgebraElement:
        """Group-like lambda_w = exp{(i/2) theta J^{kl} w_k H_l}."""
        weight = tuple(Fraction(x) for x in weight)
        cached = self._lambda_cache.get(weight)
        if cached is not None:
            return cached
        alg = self.algebra
        th = TruncSeries.theta(alg.order)
        exponent = alg.zero()
        for l in range(self.p):
            coef = Fraction(0)
            for k in range(self.p):
                coef += self.J[k][l] * weight[k]
            if coef:
                exponent = exponent + alg.gen(self.twist_gens[l]).scale(
                    th.scalar_mul(_PLUS_HALF_I * GaussRational(coef.numerator, 0, coef.denominator))
                )
        out = elem_exp(exponent)
        self._lambda_cache[weight] = out
        return out

    def lam_inv(self, weight):
        return self.lam(tuple(-Fraction(x) for x in weight))

    def q(self, w1, w2) -> TruncSeries:
        """q_{rs} = exp{(i/2) theta J^{kl} r_k s_l}."""
        key = (w1, w2)
        cached = self._q_cache.get(key)
        if cached is not None:
            return cached
        pairing = Fraction(0)
        for k in range(self.p):
            for l in range(self.p):
                pairing += self.J[k][l] * Fraction(w1[k]) * Fraction(w2[l])
        out = self._q_cache.get(pairing)
        if out is None:
            th = TruncSeries.theta(self.algebra.order)
            out = th.scalar_mul(
                _PLUS_HALF_I * GaussRational(pairing.numerator, 0, pairing.denominator)
            ).exp()
            self._q_cache[pairing] = out
        self._q_cache[key] = out
        return out

    def _validate_lambda_q(self):
        basis = self.algebra.basis
        roots = list(basis.roots.values())
        for r in roots:
            for s in roots:
                rs = tuple(a + b for a, b in zip(r, s))
                if not (self.lam(r) * self.lam(s) == self.lam(rs)):
                    raise DomainError("lambda product law fails")
                if not (self.q(s, r) == self.q(r, s).invert()):
                    raise DomainError("q antisymmetry fails")
            zero = tuple(Fraction(0) for _ in r)
            if not self.q(r, zero).is_one() or not self.q(zero, r).is_one():
                raise DomainError("q with a weightless index must be 1")

    # -- twisted structure maps -------------------------------------------------------

    def cocycle_check(self) -> bool:
        alg = self.algebra
        hopf = self.hopf
        lhs = self.chi.embed(3, (1, 2)) * self.chi.map_leg(1, hopf.coproduct, 2)
        rhs = self.chi.embed(3, (0, 1)) * self.chi.map_leg(0, hopf.coproduct, 2)
        return lhs == rhs

    def counital_check(self) -> bool:
        alg = self.algebra
        one = alg.one()
        eps_right = alg.zero()
        eps_left = alg.zero()
        for (m1, m2), c in self.chi.terms.items():
            if m2 == EMPTY:
                eps_right = eps_right + AlgebraElement(alg, {m1: c})
            if m1 == EMPTY:
                eps_left = eps_left + AlgebraElement(alg, {m2: c})
        return eps_right == one and eps_left == one

    def twisted_coproduct(self, x: AlgebraElement) -> TensorElement:
        return self.chi * self.hopf.coproduct(x) * self.chi_inv

    def U(self) -> AlgebraElement:
        if self._U is None:
            self._U = self.chi.contract_pair_right(self.hopf.antipode)
        return self._U

    def U_inv(self) -> AlgebraElement:
        if self._U_inv is None:
            self._U_inv = elem_invert(self.U())
        return self._U_inv

    def twisted_antipode(self, x: AlgebraElement) -> AlgebraElement:
        return self.U() * self.hopf.antipode(x) * self.U_inv()

    def r_matrix(self) -> TensorElement:
        return self.chi.swap_legs() * self.chi_inv

    def triangularity_check(self) -> bool:
        r = self.r_matrix()
        return r.swap_legs() * r == TensorElement.unit(self.algebra, 2)

    # -- adjoint actions ---------------------------------------------------------------

    def adjoint(self, y: AlgebraElement, x: AlgebraElement, twisted: bool) -> AlgebraElement:
        return adjoint_action(self.hopf, y, x, twist=self if twisted else None)

    def __repr__(self):
        return "TwistData(J=%s, order=%d)" % (self.J, self.algebra.order)


def adjoint_action(hopf: HopfAlgebra, y, x, twist: TwistData | None = None):
    """ad_y(x) = sum (-1)^{|x||y_(2)|} y_(1) x S(y_(2)), graded version.

    With the classical coproduct and y in the Lie algebra this is the
    super bracket; with a twist it is the deformed adjoint.
    """
    alg = hopf.algebra
    cop = twist.twisted_coproduct(y) if twist is not None else hopf.coproduct(y)
    S = (lambda e: twist.twisted_antipode(e)) if twist is not None else hopf.antipode
    out = alg.zero()
    for (m1, m2), c in cop.terms.items():
        p2 = monomial_parity(m2)
        for mx, cx in x.terms.items():
            px = monomial_parity(mx)
            sign = -1 if (p2 and px) else 1
            left = AlgebraElement(alg, {m1: c})
            mid = AlgebraElement(alg, {mx: cx})
            right = S(AlgebraElement(alg, {m2: TruncSeries.one(alg.order)}))
            term = left * mid * right
            out = out + (term if sign == 1 else -term)
    return out


def braid_pair(r_matrix: TensorElement, act, a, b, parity_a=0, parity_b=0):
    """Braiding Psi(a (x) b) as a list of (left, right, coeff) summands.

    ``act(u_monomial_element, m)`` applies a U-element leg to a module
    element.  Graded contexts pass parities for the Koszul sign.
    """
    out = []
    sign = GaussRational(-1) if (parity_a and parity_b) else GR_ONE
    alg = r_matrix.algebra
    for (m1, m2), c in r_matrix.terms.items():
        left = act(AlgebraElement(alg, {m2: TruncSeries.one(alg.order)}), b)
        right = act(AlgebraElement(alg, {m1: TruncSeries.one(alg.order)}), a)
        out.append((left, right, c.scalar_mul(sign)))
    return out
