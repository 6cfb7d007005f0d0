"""The three Weil algebras and their generator calculus.

* ``ClassicalWeil`` wraps the graded-commutative Koszul presentation
  (built in ``gda``) and adds horizontal generators.
* ``NcWeil`` is the WEIL-mode PBW algebra over the quadratic super
  basis: Lie and interior derivatives are inner super-adjoints, the
  differential is the commutator with the cubic element D.
* ``TwistedWeil`` layers the deformed adjoint and the quantum
  generators lambda_a e_a, lambda_a xi_a, lambda_a u_a on top.

Closed-form tables for the deformed operators are provided as separate
"expected_*" helpers so suites can compare them against the mechanical
evaluation.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigurationError, DomainError
from .gda import GdaElement, classical_weil_presentation
from .hopf import elem_exp
from .liealg import SuperLieBasis
from .pbw import WEIL, Algebra, AlgebraElement, ad_action
from .scalars import GaussRational, TruncSeries

_PLUS_HALF_I = GaussRational(0, 1, 2)


class AbelianPhases:
    """lambda_w and q_{rs} inside an arbitrary PBW algebra with Cartan gens."""

    def __init__(self, algebra: Algebra, J):
        self.algebra = algebra
        self.J = [[Fraction(x) for x in row] for row in J]
        self.p = len(self.J)
        basis = algebra.basis
        if self.p > basis.rank:
            raise ConfigurationError("phase matrix larger than the Cartan rank")
        self.twist_gens = basis.cartan[: self.p]
        self._lam = {}
        self._q = {}

    def lam(self, w) -> AlgebraElement:
        w = tuple(Fraction(x) for x in w)
        got = self._lam.get(w)
        if got is not None:
            return got
        alg = self.algebra
        th = TruncSeries.theta(alg.order)
        exponent = alg.zero()
        for l in range(self.p):
            coef = Fraction(0)
            for k in range(self.p):
                coef += self.J[k][l] * w[k]
            if coef:
                exponent = exponent + alg.gen(self.twist_gens[l]).scale(
                    th.scalar_mul(_PLUS_HALF_I * GaussRational(coef.numerator, 0, coef.denominator))
                )
        out = elem_exp(exponent)
        self._lam[w] = out
        return out

    def lam_inv(self, w):
        return self.lam(tuple(-Fraction(x) for x in w))

    def q(self, w1, w2) -> TruncSeries:
        key = (tuple(w1), tuple(w2))
        got = self._q.get(key)
        if got is not None:
            return got
        pairing = Fraction(0)
        for k in range(self.p):
            for l in range(self.p):
                pairing += self.J[k][l] * Fraction(w1[k]) * Fraction(w2[l])
        th = TruncSeries.theta(self.algebra.order)
        out = th.scalar_mul(
            _PLUS_HALF_I * GaussRational(pairing.numerator, 0, pairing.denominator)
        ).exp()
        self._q[key] = out
        return out


class ClassicalWeil:
    """Koszul generators e^a, th^a with the coadjoint action tables."""

    def __init__(self, basis: SuperLieBasis, order: int):
        self.basis = basis
        self.order = order
        self.pres = classical_weil_presentation(basis, order)
        self._ev = basis.even_lie

    def e_dual(self, a):
        return self.pres.gen("e^" + self.basis.gens[a].name)

    def th_dual(self, a):
        return self.pres.gen("th^" + self.basis.gens[a].name)

    def horizontal(self, a) -> GdaElement:
        """u^a = e^a + (1/2) f_bc^a th^b th^c."""
        out = self.e_dual(a)
        for b in self._ev:
            for c in self._ev:
                lin, _ = self.basis.bracket(b, c)
                coef = lin.get(a)
                if coef:
                    out = out + self.th_dual(b).wedge(self.th_dual(c)).scale(
                        coef * GaussRational(1, 0, 2)
                    )
        return out

    def L(self, a, x):
        return self.pres.L(a, x)

    def i(self, a, x):
        return self.pres.i(a, x)

    def d(self, x):
        return self.pres.d(x)


class NcWeil:
    """U(g^B)/<c-1>: inner (L, i), differential [D, .]."""

    def __init__(self, basis_quadratic: SuperLieBasis, order: int):
        if basis_quadratic.variant != "quadratic":
            raise ConfigurationError("NcWeil needs the quadratic variant basis")
        self.basis = basis_quadratic
        self.order = order
        self.algebra = Algebra(basis_quadratic, WEIL, order)
        self._ev = basis_quadratic.even_lie
        self._binv = basis_quadratic.B_inv()
        self._D = None
        self._u_cache = {}

    # -- index gymnastics ---------------------------------------------------

    def B(self, a, b) -> Fraction:
        ev = self._ev
        return self.basis.B[ev.index(a)][ev.index(b)]

    def B_up(self, a, b) -> Fraction:
        ev = self._ev
        return self._binv[ev.index(a)][ev.index(b)]

    def raised_xi(self, a) -> AlgebraElement:
        """xi^a = B^{ab} xi_b."""
        out = self.algebra.zero()
        for b in self._ev:
            coef = self.B_up(a, b)
            if coef:
                out = out + self.algebra.gen(self.basis.xi_of(b)).scale(
                    GaussRational(coef.numerator, 0, coef.denominator)
                )
        return out

    def f_raised(self, a, b, c) -> GaussRational:
        """f_a^{bc} = B^{bb'} B^{cc'} B([e_a, e_b'], e_c')."""
        total = GaussRational(0)
        for b2 in self._ev:
            cb = self.B_up(b, b2)
            if not cb:
                continue
            lin, _ = self.basis.bracket(a, b2)
            for c2 in self._ev:
                cc = self.B_up(c, c2)
                if not cc:
                    continue
                s = GaussRational(0)
                for k, coef in lin.items():
                    if k in self._ev:
                        s = s + coef * _gr(self.B(k, c2))
                total = total + _gr(cb) * _gr(cc) * s
        return total

    # -- generators -----------------------------------------------------------

    def e(self, a):
        return self.algebra.gen(a)

    def xi(self, a):
        return self.algebra.gen(self.basis.xi_of(a))

    def u(self, a) -> AlgebraElement:
        """Horizontal u_a = e_a + (1/2) f_a^{bc} xi_b xi_c."""
        got = self._u_cache.get(a)
        if got is not None:
            return got
        out = self.e(a)
        for b in self._ev:
            for c in self._ev:
                coef = self.f_raised(a, b, c)
                if coef:
                    out = out + (self.xi(b) * self.xi(c)).scale(
                        coef * GaussRational(1, 0, 2)
                    )
        self._u_cache[a] = out
        return out

    def D_element(self) -> AlgebraElement:
        """(1/3) xi^a e_a + (2/3) xi^a u_a."""
        if self._D is None:
            out = self.algebra.zero()
            third = GaussRational(1, 0, 3)
            two_third = GaussRational(2, 0, 3)
            for a in self._ev:
                xa = self.raised_xi(a)
                out = out + (xa * self.e(a)).scale(third)
                out = out + (xa * self.u(a)).scale(two_third)
            self._D = out
        return self._D

    def D_quantum_form(self, phases: AbelianPhases) -> AlgebraElement:
        """(1/3) eta^a X_a + (2/3) eta^a K_a with B-raised eta."""
        tw = TwistedWeil(self, phases)
        out = self.algebra.zero()
        third = GaussRational(1, 0, 3)
        two_third = GaussRational(2, 0, 3)
        for a in self._ev:
            eta_up = self.algebra.zero()
            for b in self._ev:
                coef = self.B_up(a, b)
                if coef:
                    eta_up = eta_up + tw.eta(b).scale(_gr(coef))
            out = out + (eta_up * tw.X(a)).scale(third)
            out = out + (eta_up * tw.K(a)).scale(two_third)
        return out

    # -- operators ----------------------------------------------------------------

    def L(self, a, x: AlgebraElement) -> AlgebraElement:
        return ad_action(self.e(a), x)

    def i(self, a, x: AlgebraElement) -> AlgebraElement:
        return ad_action(self.xi(a), x)

    def d(self, x: AlgebraElement) -> AlgebraElement:
        return ad_action(self.D_element(), x)


def _gr(fr: Fraction) -> GaussRational:
    return GaussRational(fr.numerator, 0, fr.denominator)


class TwistedWeil:
    """Deformed module structure on the same algebra, plus quantum generators."""

    def __init__(self, nc: NcWeil, phases: AbelianPhases):
        if phases.algebra is not nc.algebra:
            raise ConfigurationError("phase calculus must live in the Weil algebra")
        self.nc = nc
        self.basis = nc.basis
        self.phases = phases
        self._ev = nc._ev

    def weight_of(self, a):
        return self.basis.gens[a].weight

    def lam_of(self, a) -> AlgebraElement:
        return self.phases.lam(self.weight_of(a))

    # -- quantum generators ----------------------------------------------------

    def X(self, a) -> AlgebraElement:
        return self.lam_of(a) * self.nc.e(a)

    def eta(self, a) -> AlgebraElement:
        return self.lam_of(a) * self.nc.xi(a)

    def K(self, a) -> AlgebraElement:
        return self.lam_of(a) * self.nc.u(a)

    # -- deformed operators -------------------------------------------------------

    def L(self, a, x: AlgebraElement) -> AlgebraElement:
        g = self.basis.gens[a]
        if g.kind != "root":
            return self.nc.L(a, x)
        lam = self.lam_of(a)
        e_r = self.nc.e(a)
        return e_r * x * lam - lam * x * e_r

    def i(self, a, x: AlgebraElement) -> AlgebraElement:
        g = self.basis.gens[a]
        if g.kind != "root":
            return self.nc.i(a, x)
        lam = self.lam_of(a)
        xi_r = self.nc.xi(a)
        out = self.nc.algebra.zero()
        from .pbw import monomial_parity

        for mono, c in x.terms.items():
            xe = AlgebraElement(self.nc.algebra, {mono: c})
            t1 = xi_r * xe * lam
            t2 = lam * xe * xi_r
            if monomial_parity(mono):
                out = out + t1 + t2
            else:
                out = out + t1 - t2
        return out

    def d(self, x: AlgebraElement) -> AlgebraElement:
        return self.nc.d(x)

    def quantum_ad(self, a, x: AlgebraElement) -> AlgebraElement:
        """ad^chi_{X_a}: conjugate the deformed adjoint of e_a by lambda_a."""
        lam = self.lam_of(a)
        lam_inv = self.phases.lam_inv(self.weight_of(a))
        return lam * self.L(a, x) * lam_inv

    def quantum_bracket(self, a, b) -> AlgebraElement:
        """[X_a, X_b]_chi = ad^chi_{X_a}(X_b)."""
        return self.quantum_ad(a, self.X(b))

    def mixed_group_likes(self) -> dict:
        """Lambda_j = exp{(i/2) th J_{jl} H_l}, exposed for inspection only."""
        out = {}
        for j in range(self.phases.p):
            w = tuple(
                Fraction(1) if k == j else Fraction(0) for k in range(self.basis.rank)
            )
            out["Lambda%d" % (j + 1)] = self.phases.lam(w)
        return out


# -- closed-form oracles -------------------------------------------------------------


def expected_quantum_action(tw: TwistedWeil, op: str, a, b) -> AlgebraElement:
    """The stated tables: L_a X_b = f X, i_a X_b = f eta, L_a eta_b = f eta,
    i_a eta_b = B_ab, i_a K_b = 0, L_a K_b = f K."""
    nc = tw.nc
    basis = nc.basis
    alg = nc.algebra
    lin, _ = basis.bracket(a, b)
    out = alg.zero()
    if op == "L_X":
        for c, coef in lin.items():
            out = out + tw.X(c).scale(coef)
    elif op == "i_X":
        for c, coef in lin.items():
            out = out + tw.eta(c).scale(coef)
    elif op == "L_eta":
        for c, coef in lin.items():
            out = out + tw.eta(c).scale(coef)
    elif op == "i_eta":
        out = alg.one().scale(_gr(nc.B(a, b)))
    elif op == "L_K":
        for c, coef in lin.items():
            out = out + tw.K(c).scale(coef)
    elif op == "i_K":
        pass
    else:
        raise DomainError("unknown table %r" % op)
    return out


def expected_dK(tw: TwistedWeil, a) -> AlgebraElement:
    """d(K_a) = -q_{ab} f_a^{bc} eta_b K_c summed over b, c."""
    nc = tw.nc
    out = nc.algebra.zero()
    wa = tw.weight_of(a)
    for b in nc._ev:
        wb = tw.weight_of(b)
        qab = tw.phases.q(wa, wb)
        for c in nc._ev:
            coef = nc.f_raised(a, b, c)
            if coef:
                out = out - (tw.eta(b) * tw.K(c)).scale(qab.scalar_mul(coef))
    return out


def expected_deta(tw: TwistedWeil, a) -> AlgebraElement:
    """d(eta_a) = K_a - (1/2) q_{ab} f_a^{bc} eta_b eta_c summed over b, c."""
    nc = tw.nc
    out = tw.K(a)
    wa = tw.weight_of(a)
    half = GaussRational(1, 0, 2)
    for b in nc._ev:
        qab = tw.phases.q(wa, tw.weight_of(b))
        for c in nc._ev:
            coef = nc.f_raised(a, b, c)
            if coef:
                out = out - (tw.eta(b) * tw.eta(c)).scale(qab.scalar_mul(coef * half))
    return out


def expected_quantum_bracket(tw: TwistedWeil, a, b) -> AlgebraElement:
    """The q-bracket table on root/Cartan indices."""
    nc = tw.nc
    basis = nc.basis
    alg = nc.algebra
    ga, gb = basis.gens[a], basis.gens[b]
    if ga.kind == "cartan" and gb.kind == "cartan":
        return alg.zero()
    if ga.kind == "cartan":
        # [X_i, X_r] = r_i X_r
        r = gb.weight[basis.cartan.index(a)]
        return tw.X(b).scale(_gr(r))
    if gb.kind == "cartan":
        r = ga.weight[basis.cartan.index(b)]
        return tw.X(a).scale(_gr(-r))
    ra = ga.weight
    rb = gb.weight
    if tuple(-x for x in ra) == tuple(rb):
        # [X_{-r}, X_r] = sum r_i X_i
        out = alg.zero()
        for hi, h in enumerate(basis.cartan):
            if rb[hi]:
                out = out + tw.X(h).scale(_gr(rb[hi]))
        return out
    # [X_r, X_s] = q_{rs} f_{rs}^{r+s} X_{r+s}
    target = tuple(x + y for x, y in zip(ra, rb))
    cidx = basis.root_index(target)
    lin, _ = basis.bracket(a, b)
    out = alg.zero()
    if cidx is not None and cidx in lin:
        out = tw.X(cidx).scale(lin[cidx]).scale(tw.phases.q(ra, rb))
    return out
