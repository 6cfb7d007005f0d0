"""Weight-graded differential algebras, their deformations and checks.

A ``GdaPresentation`` lists graded-commutative generators with weights
for the torus inside the acting algebra, plus action tables for the Lie
derivative, the interior derivative and the differential on generators;
everything else extends by (graded) Leibniz.

The induced star product scales a product of weight-homogeneous
elements by q_{rs}; braided graded-commutativity and the twisted
Leibniz rules are checked exhaustively on finite windows, by the
general formulas (never the shortcut the identity being tested states).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConfigurationError,
    DomainError,
    UnknownGeneratorError,
    UnknownPresetError,
    WindowOverflowError,
)
from .hopf import TwistData
from .liealg import SuperLieBasis, ValidationReport, load_preset
from .pbw import AlgebraElement, monomial_to_word
from .scalars import GR_ONE, GaussRational, TruncSeries


@dataclass(frozen=True)
class GdaGenerator:
    name: str
    degree: int
    parity: int
    weight: tuple  # Fractions, w.r.t. the acting basis cartan
    invertible: bool = False


class GdaPresentation:
    def __init__(self, name, acting_basis: SuperLieBasis, gens, L_table, i_table,
                 d_table, order, hard_window=None, check_only=False):
        self.name = name
        self.acting = acting_basis
        self.gens = list(gens)
        self.by_name = {g.name: k for k, g in enumerate(self.gens)}
        self.order = order
        self.L_table = L_table  # (even_lie_idx, gen_idx) -> raw terms dict
        self.i_table = i_table
        self.d_table = d_table  # gen_idx -> raw terms dict
        self.hard_window = hard_window  # (max_degree, max_height) or None
        self.check_only = check_only
        self._weight_cache = {}
        self._degree_cache = {}
        self._parity_cache = {}

    # -- elements -----------------------------------------------------------

    def zero(self):
        return GdaElement(self, {})

    def one(self):
        return GdaElement(self, {(0,) * len(self.gens): TruncSeries.one(self.order)})

    def gen(self, name):
        if name not in self.by_name:
            raise UnknownGeneratorError(name)
        k = self.by_name[name]
        expo = [0] * len(self.gens)
        expo[k] = 1
        return GdaElement(self, {tuple(expo): TruncSeries.one(self.order)})

    def monomial(self, exps: dict, coeff=None):
        expo = [0] * len(self.gens)
        for nm, e in exps.items():
            expo[self.by_name[nm]] = e
        return GdaElement(
            self,
            {tuple(expo): coeff if coeff is not None else TruncSeries.one(self.order)},
        )

    def mono_degree(self, mono):
        got = self._degree_cache.get(mono)
        if got is None:
            got = sum(e * g.degree for e, g in zip(mono, self.gens))
            self._degree_cache[mono] = got
        return got

    def mono_parity(self, mono):
        got = self._parity_cache.get(mono)
        if got is None:
            got = sum(e * g.parity for e, g in zip(mono, self.gens)) % 2
            self._parity_cache[mono] = got
        return got

    def mono_weight(self, mono):
        if mono in self._weight_cache:
            return self._weight_cache[mono]
        n = self.acting.rank
        tot = [Fraction(0)] * n
        out = tuple(tot)
        for e, g in zip(mono, self.gens):
            if g.weight is None:
                out = None
                break
            for k in range(n):
                tot[k] += e * g.weight[k]
        else:
            out = tuple(tot)
        self._weight_cache[mono] = out
        return out

    def mono_height(self, mono):
        w = self.mono_weight(mono)
        if w is None:
            return None
        return sum(abs(x) for x in w)

    def mono_name(self, mono):
        parts = []
        for e, g in zip(mono, self.gens):
            if e == 0:
                continue
            parts.append(g.name if e == 1 else "%s^%d" % (g.name, e))
        return "*".join(parts) if parts else "1"

    # -- windows ---------------------------------------------------------------

    def window_monomials(self, max_degree, max_height):
        """All monomials with degree <= D and l1 weight height <= R."""
        if self.check_only:
            raise DomainError("%s is a check-only presentation" % self.name)
        ranges = []
        for g in self.gens:
            if g.parity:
                ranges.append((0, 1))
            elif g.invertible:
                bound = max_height if any(g.weight) else max_degree
                ranges.append((-bound, bound))
            else:
                top = max_degree // g.degree if g.degree else max_degree
                ranges.append((0, top))
        out = []
        for combo in itertools.product(
            *[range(lo, hi + 1) for lo, hi in ranges]
        ):
            if self.mono_degree(combo) > max_degree:
                continue
            h = self.mono_height(combo)
            if h is None or h > max_height:
                continue
            out.append(tuple(combo))
        out.sort(key=lambda m: (self.mono_degree(m), m))
        return out

    # -- derivations --------------------------------------------------------------

    def _raw_to_elem(self, raw):
        return GdaElement(self, dict(raw))

    def L(self, lie_idx, elem):
        return self._derive(self.L_table, lie_idx, elem, odd=False)

    def i(self, lie_idx, elem):
        return self._derive(self.i_table, lie_idx, elem, odd=True)

    def d(self, elem):
        return self._derive(None, None, elem, odd=True, use_d=True)

    def _gen_image(self, table, lie_idx, gen_idx, use_d):
        if use_d:
            raw = self.d_table.get(gen_idx)
        else:
            raw = table.get((lie_idx, gen_idx))
        if raw is None:
            return self.zero()
        return self._raw_to_elem(raw)

    def _derive(self, table, lie_idx, elem, odd, use_d=False):
        out = self.zero()
        for mono, c in elem.terms.items():
            acc = self._derive_mono(table, lie_idx, mono, odd, use_d)
            out = out + acc.scale(c)
        return out

    def _derive_mono(self, table, lie_idx, mono, odd, use_d):
        out = self.zero()
        prefix_parity = 0
        for k, e in enumerate(mono):
            if e == 0:
                continue
            g = self.gens[k]
            img = self._gen_image(table, lie_idx, k, use_d)
            if not img.is_zero():
                # e * g^{e-1} D(g) in place, with the odd-derivation prefix
                # sign; inside the power no sign accrues (even g, or e == 1)
                coeff = Fraction(e)
                sgn = -1 if (odd and prefix_parity % 2) else 1
                left = list(mono)
                for kk in range(k, len(mono)):
                    left[kk] = 0
                right = list(mono)
                for kk in range(0, k + 1):
                    right[kk] = 0
                lelem = GdaElement(self, {tuple(left): TruncSeries.one(self.order)})
                relem = GdaElement(self, {tuple(right): TruncSeries.one(self.order)})
                term = lelem.wedge(img).wedge(
                    GdaElement(
                        self,
                        {
                            _single(len(mono), k, e - 1): TruncSeries.one(self.order)
                        },
                    )
                ).wedge(relem)
                term = term.scale(GaussRational(coeff.numerator * sgn, 0, coeff.denominator))
                out = out + term
            prefix_parity += e * g.parity
        return out

    def theta_zero(self, elem):
        return GdaElement(
            self, {m: c.truncate_to_constant() for m, c in elem.terms.items()}
        )._prune()

    def __repr__(self):
        return "GdaPresentation(%s, %d gens)" % (self.name, len(self.gens))


def _single(n, k, e):
    expo = [0] * n
    expo[k] = e
    return tuple(expo)


class GdaElement:
    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = terms

    def _prune(self):
        self.terms = {m: c for m, c in self.terms.items() if not c.is_zero()}
        return self

    def _check(self, other):
        if self.pres is not other.pres:
            raise ConfigurationError("elements of different presentations")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
        return GdaElement(self.pres, out)._prune()

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            out[m] = -c if prev is None else prev - c
        return GdaElement(self.pres, out)._prune()

    def __neg__(self):
        return GdaElement(self.pres, {m: -c for m, c in self.terms.items()})

    def scale(self, s):
        if isinstance(s, TruncSeries):
            return GdaElement(self.pres, {m: c * s for m, c in self.terms.items()})._prune()
        return GdaElement(
            self.pres, {m: c.scalar_mul(s) for m, c in self.terms.items()}
        )._prune()

    def wedge(self, other):
        """Graded-commutative product (the untwisted one)."""
        self._check(other)
        pres = self.pres
        gens = pres.gens
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign = 0
                ok = True
                for k, g in enumerate(gens):
                    if g.parity:
                        if m1[k] and m2[k]:
                            ok = False
                            break
                        if m2[k]:
                            # move this odd factor left past m1's tail
                            sign += sum(
                                m1[j] * gens[j].parity for j in range(k + 1, len(gens))
                            )
                if not ok:
                    continue
                mono = tuple(a + b for a, b in zip(m1, m2))
                if pres.hard_window is not None:
                    D, R = pres.hard_window
                    h = pres.mono_height(mono)
                    if pres.mono_degree(mono) > D or (h is not None and h > R):
                        raise WindowOverflowError(pres.mono_name(mono))
                c = c1 * c2
                if sign % 2:
                    c = -c
                prev = out.get(mono)
                out[mono] = c if prev is None else prev + c
        return GdaElement(pres, out)._prune()

    def degree(self):
        ds = {self.pres.mono_degree(m) for m in self.terms}
        if not ds:
            return 0
        if len(ds) > 1:
            raise DomainError("element has mixed degree")
        return ds.pop()

    def parity(self):
        ps = {self.pres.mono_parity(m) for m in self.terms}
        if not ps:
            return 0
        if len(ps) > 1:
            raise DomainError("element has mixed parity")
        return ps.pop()

    def weight(self):
        ws = {self.pres.mono_weight(m) for m in self.terms}
        if len(ws) != 1:
            return None
        return ws.pop()

    def __eq__(self, other):
        if not isinstance(other, GdaElement):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            "(%s)*%s" % (c, self.pres.mono_name(m)) for m, c in sorted(self.terms.items())
        )


# -- actions of the enveloping algebra -------------------------------------------


def act_u(pres: GdaPresentation, u: AlgebraElement, a: GdaElement) -> GdaElement:
    """Evaluate a U(g-tilde) element through the (L, i, d) tables.

    The module map itself is the classical one whether or not a twist is
    in play; deformation enters only through coproducts, i.e. through
    how actions spread over products.
    """
    basis = pres.acting
    out = pres.zero()
    for mono, coeff in u.terms.items():
        cur = a
        for idx in reversed(monomial_to_word(mono)):
            g = basis.gens[idx]
            if g.kind in ("cartan", "root", "even"):
                cur = pres.L(idx, cur)
            elif g.kind == "xi":
                cur = pres.i(g.mirror, cur)
            elif g.kind == "d":
                cur = pres.d(cur)
            else:
                raise DomainError("generator %s does not act" % g.name)
            if cur.is_zero():
                break
        out = out + cur.scale(coeff)
    return out


def act_lambda(pres: GdaPresentation, twist: TwistData, w, a: GdaElement, inverse=False):
    """Group-like lambda_w acting: scales a weight monomial by q_{w,s}."""
    w = tuple(Fraction(x) for x in w)
    if inverse:
        w = tuple(-x for x in w)
    out = {}
    for mono, c in a.terms.items():
        s = pres.mono_weight(mono)
        if s is None:
            raise DomainError("lambda action needs weight-homogeneous monomials")
        out[mono] = c * twist.q(w, s)
    return GdaElement(pres, out)._prune()


# -- star product ------------------------------------------------------------------


def star(a: GdaElement, b: GdaElement, twist: TwistData, convention="isospectral"):
    """Deformed product: chi^{-1} acting through weights, then wedge.

    ``isospectral`` scales a weight pair (r, s) by exp{(i/2) th J rs};
    ``real`` drops the imaginary unit (the other way the source formulas
    can be read); both are exact.
    """
    pres = a.pres
    out = pres.zero()
    for m1, c1 in a.terms.items():
        r = pres.mono_weight(m1)
        e1 = GdaElement(pres, {m1: c1})
        for m2, c2 in b.terms.items():
            s = pres.mono_weight(m2)
            if r is None or s is None:
                raise DomainError("star needs weight-homogeneous monomials")
            factor = _star_phase(twist, r, s, convention)
            e2 = GdaElement(pres, {m2: c2})
            out = out + e1.wedge(e2).scale(factor)
    return out


def _star_phase(twist, r, s, convention):
    if convention == "isospectral":
        return twist.q(r, s)
    if convention == "real":
        pairing = Fraction(0)
        for k in range(twist.p):
            for l in range(twist.p):
                pairing += twist.J[k][l] * r[k] * s[l]
        th = TruncSeries.theta(twist.algebra.order)
        return th.scalar_mul(
            GaussRational(pairing.numerator, 0, 2 * pairing.denominator)
        ).exp()
    raise ConfigurationError("unknown star convention %r" % convention)


# -- braided structure ----------------------------------------------------------------


def braided_comm_check(pres, twist, max_degree, max_height, convention="isospectral"):
    """a*b = (-1)^{|a||b|} (R2 act b) * (R1 act a), exhaustively on a window."""
    window = pres.window_monomials(max_degree, max_height)
    r_matrix = twist.r_matrix()
    alg = twist.algebra
    for m1 in window:
        a = GdaElement(pres, {m1: TruncSeries.one(pres.order)})
        pa = pres.mono_parity(m1)
        for m2 in window:
            b = GdaElement(pres, {m2: TruncSeries.one(pres.order)})
            pb = pres.mono_parity(m2)
            lhs = star(a, b, twist, convention)
            rhs = pres.zero()
            for (mu1, mu2), c in r_matrix.terms.items():
                acted_b = act_u(pres, AlgebraElement(alg, {mu2: TruncSeries.one(alg.order)}), b)
                acted_a = act_u(pres, AlgebraElement(alg, {mu1: TruncSeries.one(alg.order)}), a)
                rhs = rhs + star(acted_b, acted_a, twist, convention).scale(c)
            if pa and pb:
                rhs = -rhs
            if lhs != rhs:
                return False, (pres.mono_name(m1), pres.mono_name(m2))
    return True, None


def lemma_l1_check(pres, twist, max_degree, max_height, convention="isospectral"):
    """a*b = (-1)^{|a||b|} wedge(chi act (b (x) a)) on a window."""
    window = pres.window_monomials(max_degree, max_height)
    alg = twist.algebra
    for m1 in window:
        a = GdaElement(pres, {m1: TruncSeries.one(pres.order)})
        pa = pres.mono_parity(m1)
        for m2 in window:
            b = GdaElement(pres, {m2: TruncSeries.one(pres.order)})
            pb = pres.mono_parity(m2)
            lhs = star(a, b, twist, convention)
            rhs = pres.zero()
            for (mu1, mu2), c in twist.chi.terms.items():
                xb = act_u(pres, AlgebraElement(alg, {mu1: TruncSeries.one(alg.order)}), b)
                xa = act_u(pres, AlgebraElement(alg, {mu2: TruncSeries.one(alg.order)}), a)
                rhs = rhs + xb.wedge(xa).scale(c)
            if pa and pb:
                rhs = -rhs
            if lhs != rhs:
                return False, (pres.mono_name(m1), pres.mono_name(m2))
    return True, None


class BraidedTensorAlgebra:
    """A (x)^braided B for two presentations over one twist."""

    def __init__(self, presA: GdaPresentation, presB: GdaPresentation, twist: TwistData):
        if presA.acting is not presB.acting:
            raise ConfigurationError("braided tensor factors must share the acting basis")
        self.A = presA
        self.B = presB
        self.twist = twist

    def element(self, a: GdaElement, b: GdaElement):
        out = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                out[(m1, m2)] = c1 * c2
        return {k: c for k, c in out.items() if not c.is_zero()}

    def multiply(self, x: dict, y: dict):
        """(a1 (x) b1)(a2 (x) b2) = a1 (R2 act a2) (x) (R1 act b1) b2, graded."""
        A, B, twist = self.A, self.B, self.twist
        alg = twist.algebra
        r_matrix = twist.r_matrix()
        out = {}
        for (ma1, mb1), c1 in x.items():
            pb1 = B.mono_parity(mb1)
            b1 = GdaElement(B, {mb1: TruncSeries.one(B.order)})
            a1 = GdaElement(A, {ma1: TruncSeries.one(A.order)})
            for (ma2, mb2), c2 in y.items():
                pa2 = A.mono_parity(ma2)
                sign = -1 if (pb1 and pa2) else 1
                a2 = GdaElement(A, {ma2: TruncSeries.one(A.order)})
                b2 = GdaElement(B, {mb2: TruncSeries.one(B.order)})
                for (mu1, mu2), cr in r_matrix.terms.items():
                    left = a1.wedge(act_u(A, AlgebraElement(alg, {mu2: TruncSeries.one(alg.order)}), a2))
                    right = act_u(B, AlgebraElement(alg, {mu1: TruncSeries.one(alg.order)}), b1).wedge(b2)
                    coeff = (c1 * c2 * cr).scalar_mul(GaussRational(sign))
                    for mL, cL in left.terms.items():
                        for mR, cR in right.terms.items():
                            key = (mL, mR)
                            add = coeff * cL * cR
                            prev = out.get(key)
                            out[key] = add if prev is None else prev + add
        return {k: c for k, c in out.items() if not c.is_zero()}

    def act(self, h: AlgebraElement, x: dict, twisted=True):
        """Covariant action through the (twisted) coproduct, with signs."""
        twist = self.twist
        hopf = twist.hopf
        cop = twist.twisted_coproduct(h) if twisted else hopf.coproduct(h)
        alg = twist.algebra
        out = {}
        from .pbw import monomial_parity

        for (mu1, mu2), c in cop.terms.items():
            p2 = monomial_parity(mu2)
            for (ma, mb), cx in x.items():
                pa = self.A.mono_parity(ma)
                sign = -1 if (p2 and pa) else 1
                left = act_u(self.A, AlgebraElement(alg, {mu1: TruncSeries.one(alg.order)}),
                             GdaElement(self.A, {ma: TruncSeries.one(self.A.order)}))
                right = act_u(self.B, AlgebraElement(alg, {mu2: TruncSeries.one(alg.order)}),
                              GdaElement(self.B, {mb: TruncSeries.one(self.B.order)}))
                coeff = (c * cx).scalar_mul(GaussRational(sign))
                for mL, cL in left.terms.items():
                    for mR, cR in right.terms.items():
                        key = (mL, mR)
                        add = coeff * cL * cR
                        prev = out.get(key)
                        out[key] = add if prev is None else prev + add
        return {k: c for k, c in out.items() if not c.is_zero()}


def leibniz_checks(pres, twist, monos=None, convention="isospectral"):
    """Deformed Leibniz rules for (L, i) and the untwisted one for d.

    Cartan-index operators distribute plainly over the star product;
    root-index operators pick up lambda factors on the other slot; d
    satisfies the classical graded rule.  Checked on all pairs from
    ``monos`` (default: the generators).
    """
    basis = pres.acting
    if monos is None:
        monos = [_single(len(pres.gens), k, 1) for k in range(len(pres.gens))]
    elems = [GdaElement(pres, {m: TruncSeries.one(pres.order)}) for m in monos]
    failures = []
    roots = list(basis.roots.items())
    for a in elems:
        pa = a.parity()
        for b in elems:
            ab = star(a, b, twist, convention)
            for h in basis.cartan:
                lhs = pres.L(h, ab)
                rhs = star(pres.L(h, a), b, twist, convention) + star(
                    a, pres.L(h, b), twist, convention
                )
                if lhs != rhs:
                    failures.append(("L cartan", basis.gens[h].name,
                                     pres.mono_name(next(iter(a.terms))),
                                     pres.mono_name(next(iter(b.terms)))))
                lhs = pres.i(h, ab)
                rhs = star(pres.i(h, a), b, twist, convention) + star(
                    a, pres.i(h, b), twist, convention
                ).scale(GaussRational((-1) ** pa))
                if lhs != rhs:
                    failures.append(("i cartan", basis.gens[h].name))
            for ridx, r in roots:
                lhs = pres.L(ridx, ab)
                rhs = star(pres.L(ridx, a), act_lambda(pres, twist, r, b, inverse=True),
                           twist, convention) + star(
                    act_lambda(pres, twist, r, a), pres.L(ridx, b), twist, convention
                )
                if lhs != rhs:
                    failures.append(("L root", basis.gens[ridx].name))
                lhs = pres.i(ridx, ab)
                rhs = star(pres.i(ridx, a), act_lambda(pres, twist, r, b, inverse=True),
                           twist, convention) + star(
                    act_lambda(pres, twist, r, a), pres.i(ridx, b), twist, convention
                ).scale(GaussRational((-1) ** pa))
                if lhs != rhs:
                    failures.append(("i root", basis.gens[ridx].name))
            lhs = pres.d(ab)
            rhs = star(pres.d(a), b, twist, convention) + star(
                a, pres.d(b), twist, convention
            ).scale(GaussRational((-1) ** pa))
            if lhs != rhs:
                failures.append(("d",))
    return not failures, failures[:3]


def covariance_check(pres, twist, h: AlgebraElement, a, b, twisted,
                     convention="isospectral"):
    """Module-algebra axiom: h acting on a product spreads by the coproduct.

    Classical coproduct pairs with the plain wedge, the twisted one with
    the star product.
    """
    from .pbw import monomial_parity

    alg = twist.algebra
    cop = twist.twisted_coproduct(h) if twisted else twist.hopf.coproduct(h)
    prod = star(a, b, twist, convention) if twisted else a.wedge(b)
    lhs = act_u(pres, h, prod)
    rhs = pres.zero()
    pa = a.parity()
    for (m1, m2), c in cop.terms.items():
        sign = -1 if (monomial_parity(m2) and pa) else 1
        xa = act_u(pres, AlgebraElement(alg, {m1: TruncSeries.one(alg.order)}), a)
        xb = act_u(pres, AlgebraElement(alg, {m2: TruncSeries.one(alg.order)}), b)
        term = star(xa, xb, twist, convention) if twisted else xa.wedge(xb)
        rhs = rhs + term.scale(c.scalar_mul(GaussRational(sign)))
    return lhs == rhs


def star_associativity_check(pres, twist, max_degree, max_height,
                             convention="isospectral"):
    """(a*b)*c = a*(b*c) over all ordered window triples."""
    window = pres.window_monomials(max_degree, max_height)
    elems = [GdaElement(pres, {m: TruncSeries.one(pres.order)}) for m in window]
    for a in elems:
        for b in elems:
            ab = star(a, b, twist, convention)
            for c in elems:
                if star(ab, c, twist, convention) != star(
                    a, star(b, c, twist, convention), twist, convention
                ):
                    return False, (
                        pres.mono_name(next(iter(a.terms))),
                        pres.mono_name(next(iter(b.terms))),
                        pres.mono_name(next(iter(c.terms))),
                    )
    return True, None


# -- presets -------------------------------------------------------------------------


def preset_point(order, acting=None):
    basis = acting if acting is not None else load_preset("torus(1)")
    return GdaPresentation("point", basis, [], {}, {}, {}, order)


def preset_torus_forms(n, order):
    basis = load_preset("torus(%d)" % n)
    gens = []
    for j in range(n):
        w = tuple(Fraction(1) if k == j else Fraction(0) for k in range(n))
        gens.append(GdaGenerator("u%d" % (j + 1), 0, 0, w, invertible=True))
    for j in range(n):
        w = tuple(Fraction(1) if k == j else Fraction(0) for k in range(n))
        gens.append(GdaGenerator("du%d" % (j + 1), 1, 1, w))
    ngens = len(gens)
    L_table, i_table, d_table = {}, {}, {}
    one = TruncSeries.one(order)
    for hk_pos, hk in enumerate(basis.cartan):
        for gidx, g in enumerate(gens):
            wk = g.weight[hk_pos]
            if wk:
                L_table[(hk, gidx)] = {
                    _single(ngens, gidx, 1): one.scalar_mul(
                        GaussRational(wk.numerator, 0, wk.denominator)
                    )
                }
        # i_{H_k}(du_j) = delta_{kj} u_j
        i_table[(hk, n + hk_pos)] = {_single(ngens, hk_pos, 1): one}
    for j in range(n):
        d_table[j] = {_single(ngens, n + j, 1): one}
    return GdaPresentation("torus_forms(%d)" % n, basis, gens, L_table, i_table,
                           d_table, order)


def classical_weil_presentation(basis: SuperLieBasis, order):
    """The Koszul model Sym (x) wedge of the dual, as a module over the basis.

    Generators e^a (degree 2) and th^a (degree 1) for each even Lie
    generator a, with the coadjoint action tables and the Koszul
    differential; weights are the negated primal weights.
    """
    ev = basis.even_lie
    gens = []
    for a in ev:
        w = basis.gens[a].weight
        gens.append(GdaGenerator("e^" + basis.gens[a].name, 2, 0,
                                 tuple(-x for x in w)))
    for a in ev:
        w = basis.gens[a].weight
        gens.append(GdaGenerator("th^" + basis.gens[a].name, 1, 1,
                                 tuple(-x for x in w)))
    ngens = len(gens)
    npos = {a: k for k, a in enumerate(ev)}
    one = TruncSeries.one(order)
    L_table, i_table, d_table = {}, {}, {}
    for b in ev:
        for a in ev:
            # L_b(e^a) = -f_{bc}^a e^c ; same constants on th^a
            linL = {}
            for c in ev:
                lin, _ = basis.bracket(b, c)
                coef = lin.get(a)
                if coef:
                    linL[c] = coef
            if linL:
                L_table[(b, npos[a])] = {
                    _single(ngens, npos[c], 1): one.scalar_mul(-coef)
                    for c, coef in linL.items()
                }
                L_table[(b, len(ev) + npos[a])] = {
                    _single(ngens, len(ev) + npos[c], 1): one.scalar_mul(-coef)
                    for c, coef in linL.items()
                }
                i_table[(b, npos[a])] = {
                    _single(ngens, len(ev) + npos[c], 1): one.scalar_mul(-coef)
                    for c, coef in linL.items()
                }
        i_table[(b, len(ev) + npos[b])] = {(0,) * ngens: one}
    for a in ev:
        d_table[len(ev) + npos[a]] = {_single(ngens, npos[a], 1): one}
    return GdaPresentation("weil[%s]" % basis.name, basis, gens, L_table, i_table,
                           d_table, order)


@dataclass
class MoyalRotationPreset:
    """Check-only: the deformed rotation coproduct on the Moyal plane."""

    two_n: int
    order: int
    check_only: bool = True

    def run_check(self, theta_matrix):
        from .hopf import HopfAlgebra
        from .pbw import ENVELOPING, Algebra
        from .tensorsq import TensorElement

        basis = load_preset("euclid(%d)" % self.two_n)
        alg = Algebra(basis, ENVELOPING, self.order)
        hopf = HopfAlgebra(alg)
        tw = TwistData(hopf, theta_matrix)
        n = self.two_n
        th = TruncSeries.theta(self.order)
        half_i = GaussRational(0, 1, 2)
        P = [alg.gen("P%d" % (a + 1)) for a in range(n)]
        ok = True
        witness = None
        for mu in range(n):
            for nu in range(mu + 1, n):
                M = alg.gen("M%d%d" % (mu + 1, nu + 1))

                def rot(a):
                    out = alg.zero()
                    if a == mu:
                        out = out + P[nu]
                    if a == nu:
                        out = out - P[mu]
                    return out

                extra = TensorElement.zero(alg, 2)
                for a in range(n):
                    for b in range(n):
                        coef = Fraction(theta_matrix[a][b])
                        if not coef:
                            continue
                        s = th.scalar_mul(half_i * GaussRational(coef.numerator, 0, coef.denominator))
                        extra = extra + (
                            TensorElement.from_factors(rot(a), P[b])
                            + TensorElement.from_factors(P[a], rot(b))
                        ).scale(s)
                if tw.twisted_coproduct(M) != hopf.coproduct(M) + extra:
                    ok = False
                    witness = "M%d%d" % (mu + 1, nu + 1)
        return ok, witness


def load_gda_preset(name, order=4):
    name = name.strip()
    if name == "point":
        return preset_point(order)
    if name.startswith("torus_forms(") and name.endswith(")"):
        pres = preset_torus_forms(int(name[12:-1]), order)
        rep = validate_gda(pres, max_degree=2, max_height=2)
        if not rep.ok():
            raise DomainError("preset %s failed validation:\n%s" % (name, rep))
        return pres
    if name.startswith("moyal_rotations(") and name.endswith(")"):
        return MoyalRotationPreset(int(name[16:-1]), order)
    raise UnknownPresetError(name)


# -- structural validation ---------------------------------------------------------


def validate_gda(pres: GdaPresentation, max_degree, max_height) -> ValidationReport:
    """(L,i,d) commutation relations as operators on a window, plus weights."""
    rep = ValidationReport()
    basis = pres.acting
    window = pres.window_monomials(max_degree, max_height)
    elems = [GdaElement(pres, {m: TruncSeries.one(pres.order)}) for m in window]
    ev = basis.even_lie

    def opL(a):
        return lambda x: pres.L(a, x)

    def opi(a):
        return lambda x: pres.i(a, x)

    bad = []
    for a in ev:
        for b in ev:
            lin, _ = basis.bracket(a, b)
            for x in elems:
                # [L_a, L_b] = f_ab^c L_c
                got = pres.L(a, pres.L(b, x)) - pres.L(b, pres.L(a, x))
                want = pres.zero()
                for c, coef in lin.items():
                    want = want + pres.L(c, x).scale(coef)
                if got != want:
                    bad.append(("L,L", basis.gens[a].name, basis.gens[b].name))
                    break
                # [L_a, i_b] = f_ab^c i_c
                got = pres.L(a, pres.i(b, x)) - pres.i(b, pres.L(a, x))
                want = pres.zero()
                for c, coef in lin.items():
                    want = want + pres.i(c, x).scale(coef)
                if got != want:
                    bad.append(("L,i", basis.gens[a].name, basis.gens[b].name))
                    break
                # [i_a, i_b] = 0 (anticommutator)
                got = pres.i(a, pres.i(b, x)) + pres.i(b, pres.i(a, x))
                if not got.is_zero():
                    bad.append(("i,i", basis.gens[a].name, basis.gens[b].name))
                    break
    rep.add("relations [L,L],[L,i],[i,i]", not bad, str(bad[:2]))

    bad = []
    for a in ev:
        for x in elems:
            if not (pres.L(a, pres.d(x)) - pres.d(pres.L(a, x))).is_zero():
                bad.append(("L,d", basis.gens[a].name))
                break
            got = pres.i(a, pres.d(x)) + pres.d(pres.i(a, x))
            if got != pres.L(a, x):
                bad.append(("i,d", basis.gens[a].name))
                break
    for x in elems:
        if not pres.d(pres.d(x)).is_zero():
            bad.append(("d,d",))
            break
    rep.add("relations [L,d],[i,d],[d,d]", not bad, str(bad[:2]))

    bad = []
    for hp, h in enumerate(basis.cartan):
        for gidx, g in enumerate(pres.gens):
            x = pres.gen(g.name)
            want = x.scale(GaussRational(g.weight[hp].numerator, 0, g.weight[hp].denominator))
            if pres.L(h, x) != want:
                bad.append((basis.gens[h].name, g.name))
    rep.add("weight consistency", not bad, str(bad[:2]))
    return rep
