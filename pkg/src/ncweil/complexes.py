"""Weil, BRST and Cartan complexes on finite windows, with exact ranks.

A complex is a tensor square of two "leg adapters" (a Weil algebra, a
graded-commutative presentation, or the point); elements are sparse
dictionaries keyed by pairs of leg monomials.  Total operators follow
the matching coproduct: primitive legs for the classical structure,
lambda-decorated legs for root operators in the twisted one.

Everything a window solver reports is exact: kernels over the Gaussian
rationals at order zero, lifted order by order through the series
truncation, with stabilization checked rather than assumed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import ConfigurationError, DomainError, WindowNotStabilizedError
from .gda import GdaElement, GdaPresentation
from .linalg import in_row_span, kernel_basis, rref, solve
from .pbw import (
    Algebra,
    AlgebraElement,
    EMPTY,
    monomial_filtration,
    monomial_name,
    monomial_parity,
    monomial_to_word,
    monomial_weight,
)
from .scalars import GR_ONE, GR_ZERO, GaussRational, TruncSeries
from .weil import AbelianPhases, ClassicalWeil, NcWeil, TwistedWeil, _gr

# -- leg adapters -----------------------------------------------------------------


class PointModule:
    """The trivial algebra: scalars with zero action."""

    def __init__(self, order):
        self.order = order
        self.unit_key = ()

    def keys(self, **window):
        return [()]

    def mul(self, d1, d2):
        out = {}
        for k1, c1 in d1.items():
            for k2, c2 in d2.items():
                c = c1 * c2
                prev = out.get(())
                out[()] = c if prev is None else prev + c
        return {k: c for k, c in out.items() if not c.is_zero()}

    def L(self, a, d):
        return {}

    def i(self, a, d):
        return {}

    def d_op(self, d):
        return {}

    def parity(self, key):
        return 0

    def degree(self, key):
        return 0

    def weight(self, key):
        return None  # treated as zero everywhere

    def lam_scale(self, w, key, inverse=False):
        return GR_ONE

    def name(self, key):
        return "1"


class GdaModule:
    """A graded-commutative presentation as one leg."""

    def __init__(self, pres: GdaPresentation, phases: AbelianPhases | None = None):
        self.pres = pres
        self.order = pres.order
        self.phases = phases
        self.unit_key = (0,) * len(pres.gens)

    def keys(self, max_degree=2, max_height=2, **_):
        return self.pres.window_monomials(max_degree, max_height)

    def _wrap(self, d):
        return GdaElement(self.pres, dict(d))

    def mul(self, d1, d2):
        return self._wrap(d1).wedge(self._wrap(d2)).terms

    def L(self, a, d):
        return self.pres.L(a, self._wrap(d)).terms

    def i(self, a, d):
        return self.pres.i(a, self._wrap(d)).terms

    def d_op(self, d):
        return self.pres.d(self._wrap(d)).terms

    def parity(self, key):
        return self.pres.mono_parity(key)

    def degree(self, key):
        return self.pres.mono_degree(key)

    def weight(self, key):
        return self.pres.mono_weight(key)

    def lam_scale(self, w, key, inverse=False):
        s = self.weight(key)
        q = self.phases.q(w, s)
        return q if not inverse else q.invert()

    def kalkman_odd(self, a):
        """The degree-1 dual generator paired with i_a in the exponential."""
        g = self.pres.gen("th^" + self.pres.acting.gens[a].name)
        return g.terms

    def name(self, key):
        return self.pres.mono_name(key)


class WeilModule:
    """The nc Weil algebra (optionally with its twisted module structure)."""

    def __init__(self, nc: NcWeil, twisted: TwistedWeil | None = None):
        self.nc = nc
        self.algebra = nc.algebra
        self.order = nc.order
        self.twisted = twisted
        self.phases = twisted.phases if twisted is not None else None
        self.unit_key = EMPTY

    def keys(self, max_filtration=3, **_):
        alg = self.algebra
        basis = alg.basis
        evens = [i for i in basis.even_lie]
        odds = [basis.xi_of(i) for i in evens]
        out = []
        for odd_count in range(0, min(len(odds), max_filtration) + 1):
            for odd_subset in itertools.combinations(odds, odd_count):
                budget = max_filtration - odd_count
                for even_combo in _even_exponents(evens, budget // 2):
                    mono = (tuple(even_combo), tuple(sorted(odd_subset)))
                    out.append(mono)
        out.sort(key=lambda m: (monomial_filtration(alg, m), m))
        return out

    def _wrap(self, d):
        return AlgebraElement(self.algebra, dict(d))

    def mul(self, d1, d2):
        return (self._wrap(d1) * self._wrap(d2)).terms

    def L(self, a, d):
        x = self._wrap(d)
        out = self.twisted.L(a, x) if self.twisted is not None else self.nc.L(a, x)
        return out.terms

    def i(self, a, d):
        x = self._wrap(d)
        out = self.twisted.i(a, x) if self.twisted is not None else self.nc.i(a, x)
        return out.terms

    def d_op(self, d):
        return self.nc.d(self._wrap(d)).terms

    def parity(self, key):
        return monomial_parity(key)

    def degree(self, key):
        return monomial_filtration(self.algebra, key)

    def weight(self, key):
        return monomial_weight(self.algebra, key)

    def lam_scale(self, w, key, inverse=False):
        s = self.weight(key)
        q = self.phases.q(w, s)
        return q if not inverse else q.invert()

    def kalkman_odd(self, a):
        return self.nc.raised_xi(a).terms

    def name(self, key):
        return monomial_name(self.algebra, key)


def _even_exponents(evens, budget):
    """All exponent assignments with total exponent <= budget."""
    if budget == 0:
        yield ()
        return
    for combo in _exponent_rec(evens, 0, budget):
        yield combo


def _exponent_rec(evens, pos, budget):
    if pos == len(evens):
        yield ()
        return
    for e in range(budget + 1):
        for rest in _exponent_rec(evens, pos + 1, budget - e):
            yield ((evens[pos], e),) + rest if e else rest


# -- the tensor complex --------------------------------------------------------------


class WeilComplex:
    """left (x) right with total operators from the chosen coproduct."""

    def __init__(self, left, right, twisted=False):
        self.left = left
        self.right = right
        self.twisted = twisted
        self.order = left.order
        if right.order != left.order:
            raise ConfigurationError("legs disagree on the truncation order")
        basis = self._acting_basis()
        self.basis = basis
        if twisted and getattr(left, "phases", None) is None:
            raise ConfigurationError("twisted complex needs phase data on the left leg")
        self.phases = getattr(left, "phases", None)

    def _acting_basis(self):
        for leg in (self.left, self.right):
            if isinstance(leg, WeilModule):
                return leg.algebra.basis
            if isinstance(leg, GdaModule):
                return leg.pres.acting
        raise ConfigurationError("at least one leg must carry the acting algebra")

    # -- element helpers ---------------------------------------------------------

    def element(self, dl, dr):
        out = {}
        for kl, cl in dl.items():
            for kr, cr in dr.items():
                c = cl * cr
                if not c.is_zero():
                    out[(kl, kr)] = c
        return out

    def unit(self):
        return {
            (self.left.unit_key, self.right.unit_key): TruncSeries.one(self.order)
        }

    def add(self, x, y):
        out = dict(x)
        for k, c in y.items():
            prev = out.get(k)
            out[k] = c if prev is None else prev + c
        return {k: c for k, c in out.items() if not c.is_zero()}

    def scale(self, x, s):
        if isinstance(s, TruncSeries):
            return {k: c * s for k, c in x.items() if not (c * s).is_zero()}
        return {k: c.scalar_mul(s) for k, c in x.items() if not c.scalar_mul(s).is_zero()}

    def neg(self, x):
        return {k: -c for k, c in x.items()}

    def theta_zero(self, x):
        out = {k: c.truncate_to_constant() for k, c in x.items()}
        return {k: c for k, c in out.items() if not c.is_zero()}

    def keys_weight(self, key):
        kl, kr = key
        wl = self.left.weight(kl)
        wr = self.right.weight(kr)
        if wl is None and wr is None:
            return None
        if wl is None:
            return wr
        if wr is None:
            return wl
        return tuple(a + b for a, b in zip(wl, wr))

    def key_degree(self, key):
        return self.left.degree(key[0]) + self.right.degree(key[1])

    def key_parity(self, key):
        return (self.left.parity(key[0]) + self.right.parity(key[1])) % 2

    def name(self, key):
        return "%s (x) %s" % (self.left.name(key[0]), self.right.name(key[1]))

    # -- per-term distribution over leg images ---------------------------------------

    def _combine(self, key, coeff, left_img, right_img):
        out = {}
        for kl, cl in left_img.items():
            for kr, cr in right_img.items():
                c = coeff * cl * cr
                if c.is_zero():
                    continue
                k2 = (kl, kr)
                prev = out.get(k2)
                out[k2] = c if prev is None else prev + c
        return out

    def _single_left(self, key):
        return {key[0]: TruncSeries.one(self.order)}

    def _single_right(self, key):
        return {key[1]: TruncSeries.one(self.order)}

    # -- total operators -----------------------------------------------------------

    def L_tot(self, a, x):
        basis = self.basis
        g = basis.gens[a]
        out = {}
        root = self.twisted and g.kind == "root"
        for key, c in x.items():
            lk = self._single_left(key)
            rk = self._single_right(key)
            if not root:
                img = self._combine(key, c, self.left.L(a, lk), rk)
                out = self.add(out, img)
                img = self._combine(key, c, lk, self.right.L(a, rk))
                out = self.add(out, img)
            else:
                w = g.weight
                lam_inv_r = self.right.lam_scale(w, key[1], inverse=True)
                img = self._combine(key, c * lam_inv_r, self.left.L(a, lk), rk)
                out = self.add(out, img)
                lam_l = self.left.lam_scale(w, key[0])
                img = self._combine(key, c * lam_l, lk, self.right.L(a, rk))
                out = self.add(out, img)
        return out

    def i_tot(self, a, x):
        basis = self.basis
        g = basis.gens[a]
        out = {}
        root = self.twisted and g.kind == "root"
        for key, c in x.items():
            lk = self._single_left(key)
            rk = self._single_right(key)
            sign = GaussRational(-1) if self.left.parity(key[0]) else GR_ONE
            if not root:
                img = self._combine(key, c, self.left.i(a, lk), rk)
                out = self.add(out, img)
                img = self._combine(key, c.scalar_mul(sign), lk, self.right.i(a, rk))
                out = self.add(out, img)
            else:
                w = g.weight
                lam_inv_r = self.right.lam_scale(w, key[1], inverse=True)
                img = self._combine(key, c * lam_inv_r, self.left.i(a, lk), rk)
                out = self.add(out, img)
                lam_l = self.left.lam_scale(w, key[0])
                img = self._combine(key, (c * lam_l).scalar_mul(sign), lk,
                                    self.right.i(a, rk))
                out = self.add(out, img)
        return out

    def delta(self, x):
        """d (x) 1 + 1 (x) d with the Koszul sign."""
        out = {}
        for key, c in x.items():
            lk = self._single_left(key)
            rk = self._single_right(key)
            out = self.add(out, self._combine(key, c, self.left.d_op(lk), rk))
            sign = GaussRational(-1) if self.left.parity(key[0]) else GR_ONE
            out = self.add(
                out, self._combine(key, c.scalar_mul(sign), lk, self.right.d_op(rk))
            )
        return out

    # -- products --------------------------------------------------------------------

    def mul_plain(self, x, y):
        """Graded tensor-product multiplication (cocommutative setting)."""
        out = {}
        for (kl1, kr1), c1 in x.items():
            p_r1 = self.right.parity(kr1)
            for (kl2, kr2), c2 in y.items():
                sgn = -1 if (p_r1 and self.left.parity(kl2)) else 1
                c = (c1 * c2).scalar_mul(GaussRational(sgn))
                left_img = self.left.mul({kl1: TruncSeries.one(self.order)},
                                         {kl2: TruncSeries.one(self.order)})
                right_img = self.right.mul({kr1: TruncSeries.one(self.order)},
                                           {kr2: TruncSeries.one(self.order)})
                out = self.add(out, self._combine((kl1, kr1), c, left_img, right_img))
        return out

    def mul_braided(self, x, y):
        """(a1 (x) b1)(a2 (x) b2) = a1 (R2 act a2) (x) (R1 act b1) b2.

        The R-matrix legs act through weights; graded Koszul sign included.
        """
        if self.phases is None:
            return self.mul_plain(x, y)
        out = {}
        for (kl1, kr1), c1 in x.items():
            p_r1 = self.right.parity(kr1)
            w_r1 = self.right.weight(kr1)
            for (kl2, kr2), c2 in y.items():
                sgn = -1 if (p_r1 and self.left.parity(kl2)) else 1
                w_l2 = self.left.weight(kl2)
                # R = chi^{-2} with legs (R1 on b1, R2 on a2) gives
                # exp{i th J^{kl} (w_r1)_k (w_l2)_l} = q(w_r1, w_l2)^2
                phase = self.phases.q(w_r1 or _zero_w(self), w_l2 or _zero_w(self))
                phase = phase * phase
                c = (c1 * c2 * phase).scalar_mul(GaussRational(sgn))
                left_img = self.left.mul({kl1: TruncSeries.one(self.order)},
                                         {kl2: TruncSeries.one(self.order)})
                right_img = self.right.mul({kr1: TruncSeries.one(self.order)},
                                           {kr2: TruncSeries.one(self.order)})
                out = self.add(out, self._combine((kl1, kr1), c, left_img, right_img))
        return out

    # -- chi and Kalkman ---------------------------------------------------------------

    def chi_act(self, x, inverse=False):
        """The twist element acting through the weight pairing."""
        if self.phases is None:
            return dict(x)
        out = {}
        for key, c in x.items():
            wl = self.left.weight(key[0]) or _zero_w(self)
            wr = self.right.weight(key[1]) or _zero_w(self)
            q = self.phases.q(wl, wr)
            out[key] = c * (q.invert() if not inverse else q)
        return {k: c for k, c in out.items() if not c.is_zero()}

    def kalkman_T(self, x):
        """sum_a (xi^a . ) (x) i_a with the Koszul sign."""
        out = {}
        for key, c in x.items():
            sign = GaussRational(-1) if self.left.parity(key[0]) else GR_ONE
            for a in self.basis.even_lie:
                right_img = self.right.i(a, self._single_right(key))
                if not right_img:
                    continue
                left_img = self.left.mul(self.left.kalkman_odd(a),
                                         self._single_left(key))
                out = self.add(
                    out, self._combine(key, c.scalar_mul(sign), left_img, right_img)
                )
        return out

    def kalkman(self, x, inverse=False, twisted=False):
        """exp(T) (or its inverse), conjugated by chi when twisted."""
        if twisted:
            y = self.chi_act(x, inverse=True)
            y = self.kalkman(y, inverse=inverse, twisted=False)
            return self.chi_act(y, inverse=False)
        out = dict(x)
        term = dict(x)
        k = 0
        while term:
            k += 1
            term = self.kalkman_T(term)
            if inverse and k % 2:
                contrib = self.neg(term)
            else:
                contrib = term
            contrib = self.scale(contrib, GaussRational(1, 0, _factorial(k)))
            out = self.add(out, contrib)
            if k > 200:
                raise DomainError("Kalkman exponential did not terminate")
        return out


def _zero_w(cx):
    return tuple(Fraction(0) for _ in range(cx.basis.rank))


def _factorial(k):
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


# -- window solving ------------------------------------------------------------------


class WindowSolver:
    """Exact kernel machinery over an enumerated product window."""

    def __init__(self, cx: WeilComplex, left_window=None, right_window=None):
        self.cx = cx
        lw = left_window or {}
        rw = right_window or {}
        self.keys = [
            (kl, kr)
            for kl in cx.left.keys(**lw)
            for kr in cx.right.keys(**rw)
        ]
        self.index = {k: i for i, k in enumerate(self.keys)}

    def weight_zero_keys(self):
        out = []
        for k in self.keys:
            w = self.cx.keys_weight(k)
            if w is None or not any(w):
                out.append(k)
        return out

    def _coords0(self, elem, extra_index):
        """Order-0 coordinates; unseen keys are appended to extra_index."""
        row = {}
        for key, c in elem.items():
            if key not in extra_index:
                extra_index[key] = len(extra_index)
            row[extra_index[key]] = c.constant_term()
        return row

    def basic_subspace(self, lift=True, twisted=None):
        """Solutions of all L_tot = i_tot = 0 in the window span.

        Returns a list of elements (dict key -> TruncSeries), exact to
        order 0 and, when ``lift``, corrected order by order.
        """
        cx = self.cx
        twisted = cx.twisted if twisted is None else twisted
        cand = self.weight_zero_keys()
        ops = self._constraint_ops(twisted)
        vecs = [
            {k: TruncSeries.one(cx.order)} for k in cand
        ]  # current solution basis as elements
        for op in ops:
            vecs = self._kernel_step(vecs, op)
            if not vecs:
                return []
        if lift and cx.order > 0:
            vecs = self._lift(vecs, ops)
        return vecs

    def _constraint_ops(self, twisted):
        cx = self.cx
        basis = cx.basis
        ops = []

        def mkL(a, tw):
            def op(x):
                saved = cx.twisted
                cx.twisted = tw
                try:
                    return cx.L_tot(a, x)
                finally:
                    cx.twisted = saved

            return op

        def mki(a, tw):
            def op(x):
                saved = cx.twisted
                cx.twisted = tw
                try:
                    return cx.i_tot(a, x)
                finally:
                    cx.twisted = saved

            return op

        for a in basis.even_lie:
            if basis.gens[a].kind == "cartan":
                continue  # weight-zero filtering already enforces these
            ops.append(mkL(a, twisted))
        for a in basis.even_lie:
            ops.append(mki(a, twisted))
        return ops

    def _kernel_step(self, vecs, op):
        if not vecs:
            return vecs
        cx = self.cx
        extra = {}
        rows_per_vec = []
        for v in vecs:
            img = op(v)
            rows_per_vec.append(self._coords0(img, extra))
        ncols_img = len(extra)
        if ncols_img == 0:
            return vecs
        mat = []
        for row in rows_per_vec:
            mat.append([row.get(j, GR_ZERO) for j in range(ncols_img)])
        # kernel of the transpose action: combinations of vecs mapping to 0
        mt = [[mat[i][j] for i in range(len(vecs))] for j in range(ncols_img)]
        combos = kernel_basis(mt, len(vecs), GR_ONE, GR_ZERO)
        out = []
        for combo in combos:
            elem = {}
            for coef, v in zip(combo, vecs):
                if not coef:
                    continue
                for k, c in v.items():
                    add = c.scalar_mul(coef)
                    prev = elem.get(k)
                    elem[k] = add if prev is None else prev + add
            elem = {k: c for k, c in elem.items() if not c.is_zero()}
            if elem:
                out.append(elem)
        return out

    def _lift(self, vecs, ops):
        """Order-by-order correction so constraints hold mod theta^{N+1}.

        Corrections are sought in the weight-zero part of the window (the
        Cartan constraints are enforced by that restriction).
        """
        cx = self.cx
        order = cx.order
        support = self.weight_zero_keys()

        def apply_all(elem):
            imgs = []
            for op in ops:
                imgs.append(op(elem))
            return imgs

        # stacked constraint matrix on the weight-zero support
        extra = {}
        cols = []
        for k in support:
            imgs = apply_all({k: TruncSeries.one(order)})
            col = {}
            for oi, img in enumerate(imgs):
                for key, c in img.items():
                    if (oi, key) not in extra:
                        extra[(oi, key)] = len(extra)
                    col[extra[(oi, key)]] = c
            cols.append(col)
        nrows = len(extra)
        M_series = [[TruncSeries.zero(order)] * len(support) for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, c in col.items():
                M_series[i][j] = c
        M_slices = [
            [[_coeff_at(M_series[i][j], t) for j in range(len(support))]
             for i in range(nrows)]
            for t in range(order + 1)
        ]
        M0 = M_slices[0]
        if all(
            all(not x for x in row) for t in range(1, order + 1) for row in M_slices[t]
        ):
            return vecs  # constraints carry no theta dependence
        out = []
        for v in vecs:
            coords = [
                [_coeff_at(v.get(k, TruncSeries.zero(order)), t) for k in support]
                for t in range(order + 1)
            ]
            ok = True
            for t in range(1, order + 1):
                # solve M0 x_t = - sum_{s>=1} M_s x_{t-s}
                rhs = [GR_ZERO] * nrows
                for s in range(1, t + 1):
                    Ms = M_slices[s]
                    xprev = coords[t - s]
                    for i in range(nrows):
                        acc = rhs[i]
                        row = Ms[i]
                        for j, xc in enumerate(xprev):
                            if xc and row[j]:
                                acc = acc + row[j] * xc
                        rhs[i] = acc
                target = [-r for r in rhs]
                sol = solve(M0, target, len(support))
                if sol is None:
                    ok = False
                    break
                coords[t] = [a + b for a, b in zip(coords[t], sol)]
            if not ok:
                raise WindowNotStabilizedError(
                    "series correction of a basic solution failed",
                    witness=self.describe(v),
                )
            lifted = {}
            for j, k in enumerate(support):
                series = TruncSeries([coords[t][j] for t in range(order + 1)], order)
                if not series.is_zero():
                    lifted[k] = series
            out.append(lifted)
        return out

    def describe(self, elem):
        parts = []
        for key, c in sorted(elem.items(), key=lambda kv: str(kv[0])):
            parts.append("(%s)*%s" % (c, self.cx.name(key)))
        return " + ".join(parts) if parts else "0"

    # -- spans and ranks ------------------------------------------------------------

    def coords_full(self, elem, key_list, key_index):
        return [elem.get(k, TruncSeries.zero(self.cx.order)) for k in key_list]

    def span_matrix0(self, vecs):
        keys = sorted({k for v in vecs for k in v}, key=lambda k: str(k))
        idx = {k: i for i, k in enumerate(keys)}
        rows = []
        for v in vecs:
            row = [GR_ZERO] * len(keys)
            for k, c in v.items():
                row[idx[k]] = c.constant_term()
            rows.append(row)
        return rows, keys

    def spans_equal0(self, vecs_a, vecs_b):
        keys = sorted(
            {k for v in vecs_a for k in v} | {k for v in vecs_b for k in v},
            key=lambda k: str(k),
        )
        idx = {k: i for i, k in enumerate(keys)}

        def rows(vecs):
            out = []
            for v in vecs:
                row = [GR_ZERO] * len(keys)
                for k, c in v.items():
                    row[idx[k]] = c.constant_term()
                out.append(row)
            return out

        ra, pa = rref(rows(vecs_a), len(keys))
        rb, pb = rref(rows(vecs_b), len(keys))
        return ra == rb and pa == pb


def _coeff_at(series, t):
    return series.coeffs[t]


def gda_cohomology_ranks(pres: GdaPresentation, max_degree, max_height):
    """Betti numbers of (pres, d) per degree, at order zero.

    The enumeration runs one degree past the request so top-degree
    kernels are honest.
    """
    from .linalg import rank as mrank

    monos = pres.window_monomials(max_degree + 1, max_height)
    by_degree = {}
    for m in monos:
        by_degree.setdefault(pres.mono_degree(m), []).append(m)
    all_index = {m: i for i, m in enumerate(monos)}
    kernels = {}
    images = {}
    for deg in sorted(by_degree):
        if deg > max_degree:
            continue
        rows = []
        for m in by_degree[deg]:
            dm = pres.d(GdaElement(pres, {m: TruncSeries.one(pres.order)}))
            row = [GR_ZERO] * len(monos)
            for k, c in dm.terms.items():
                if k not in all_index:
                    raise WindowNotStabilizedError(
                        "differential escapes the window at " + pres.mono_name(k),
                        witness=pres.mono_name(m),
                    )
                row[all_index[k]] = c.constant_term()
            rows.append(row)
        r = mrank(rows, len(monos)) if rows else 0
        images[deg] = r
        kernels[deg] = len(by_degree[deg]) - r
    ranks = {}
    for deg in range(0, max_degree + 1):
        dim_ker = kernels.get(deg, 0)
        ranks[deg] = dim_ker - images.get(deg - 1, 0)
    return ranks


def cohomology_ranks(solver: WindowSolver, vecs, degree_of_key, max_degree):
    """Betti numbers of (span(vecs), delta) at order zero, graded by degree.

    Checks that delta maps the span into itself (stabilization) and that
    it raises the given degree by one; raises WindowNotStabilizedError
    with a witness otherwise.
    """
    cx = solver.cx
    if not vecs:
        return {}
    # group basic vectors by degree: each must be homogeneous; degrees
    # beyond max_degree + 1 cannot influence the requested ranks
    graded = {}
    kept = []
    for v in vecs:
        degs = {degree_of_key(k) for k in v}
        if len(degs) != 1:
            raise WindowNotStabilizedError(
                "basic element is not degree-homogeneous", witness=solver.describe(v)
            )
        deg = degs.pop()
        if deg > max_degree + 1:
            continue
        graded.setdefault(deg, []).append(v)
        kept.append(v)
    vecs = kept
    keys = sorted({k for v in vecs for k in v}, key=lambda k: str(k))
    idx = {k: i for i, k in enumerate(keys)}
    span_rows = []
    for v in vecs:
        row = [GR_ZERO] * len(keys)
        for k, c in v.items():
            row[idx[k]] = c.constant_term()
        span_rows.append(row)
    span_red, span_piv = rref(span_rows, len(keys))

    def in_span(elem):
        row = [GR_ZERO] * len(keys)
        for k, c in elem.items():
            if k not in idx:
                return False, k
            row[idx[k]] = c.constant_term()
        return in_row_span(span_red, span_piv, row), None

    # delta matrices between graded pieces
    from .linalg import rank as mrank

    ranks = {}
    images = {}
    kernels = {}
    for deg in sorted(graded):
        if deg > max_degree:
            continue
        vs = graded[deg]
        img_rows = []
        for v in vs:
            dv = cx.delta(v)
            dv0 = {}
            for kk, cc in dv.items():
                c0 = cc.truncate_to_constant()
                if not c0.is_zero():
                    dv0[kk] = c0
            ok, missing = in_span(dv0)
            if not ok:
                raise WindowNotStabilizedError(
                    "delta escapes the basic window at %s"
                    % (cx.name(missing) if missing is not None else "span"),
                    witness=solver.describe(v),
                )
            for k in dv0:
                if degree_of_key(k) != deg + 1:
                    raise WindowNotStabilizedError(
                        "delta is not degree +1 on the window",
                        witness=solver.describe(v),
                    )
            row = [GR_ZERO] * len(keys)
            for k, c in dv0.items():
                row[idx[k]] = c.constant_term()
            img_rows.append(row)
        r = mrank(img_rows, len(keys)) if img_rows else 0
        images[deg] = r
        kernels[deg] = len(vs) - r
    for deg in range(0, max_degree + 1):
        dim_ker = kernels.get(deg, len(graded.get(deg, [])))
        ranks[deg] = dim_ker - images.get(deg - 1, 0)
    return ranks
