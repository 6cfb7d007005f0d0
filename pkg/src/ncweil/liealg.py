"""Structure constants, root data and quadratic forms for the algebras acted with.

A ``SuperLieBasis`` holds an even Lie algebra in Cartan-Weyl form
([H_i, E_r] = r_i E_r, [E_{-r}, E_r] = sum_i r_i H_i) together with one
of its super extensions:

* variant ``"tilde"``     -- odd mirrors xi_a with [xi,xi] = 0 plus the odd
  generator d ([xi_a, d] = e_a), the symmetry algebra whose enveloping
  algebra is twisted;
* variant ``"quadratic"`` -- odd mirrors with [xi_a, xi_b] = B_ab c and a
  central even c, the algebra behind the deformed Weil construction.

Presets are built from explicit matrix representations over Q and then
re-validated (graded Jacobi, invariance of B, weight property) rather
than trusted.

A note on the catalog: the normalization above forces the root system
geometry onto the rational weight vectors, and for the rank-2 A2 system
that geometry is not realizable over Q (two rational vectors of equal
length at 120 degrees would need a Gram determinant 3 = square).  The
``sl3`` preset therefore realizes the A2 roots inside gl(3) using the
three diagonal matrix units as commuting generators; every relation
above then holds with integer roots, at the price of one extra central
Cartan direction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, UnknownPresetError
from .linalg import solve
from .scalars import GR_ONE, GR_ZERO, GaussRational


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int  # 0 even, 1 odd
    kind: str  # 'cartan' | 'root' | 'even' | 'c' | 'xi' | 'd'
    weight: tuple | None = None  # Fractions, w.r.t. the cartan list
    mirror: int | None = None  # xi <-> even partner index
    degree: int = 2  # classical grading: even 2, odd 1


class SuperLieBasis:
    """Generators, ordered bracket table, quadratic form and root data."""

    def __init__(self, name, gens, brackets, B=None, variant="tilde", twist_trivial=False):
        self.name = name
        self.gens = list(gens)
        self.brackets = dict(brackets)
        self.B = B  # dense over the even Lie generators (cartan+root+even)
        self.variant = variant
        self.twist_trivial = twist_trivial
        self.cartan = [i for i, g in enumerate(self.gens) if g.kind == "cartan"]
        self.roots = {
            i: g.weight for i, g in enumerate(self.gens) if g.kind == "root"
        }
        self.even_lie = [
            i for i, g in enumerate(self.gens) if g.kind in ("cartan", "root", "even")
        ]
        self.by_name = {g.name: i for i, g in enumerate(self.gens)}
        self.rank = len(self.cartan)
        self._binv = None

    # -- bracket access ----------------------------------------------------

    def bracket(self, i, j):
        """[gen_i, gen_j] as (dict gen_index -> GaussRational, constant)."""
        got = self.brackets.get((i, j))
        if got is not None:
            return got
        rev = self.brackets.get((j, i))
        if rev is None:
            return {}, GR_ZERO
        sign = GaussRational(-1) if (self.gens[i].parity * self.gens[j].parity) % 2 == 0 else GR_ONE
        lin, const = rev
        return {k: sign * c for k, c in lin.items()}, sign * const

    def parity(self, i):
        return self.gens[i].parity

    def index(self, name):
        from .errors import UnknownGeneratorError

        if name not in self.by_name:
            raise UnknownGeneratorError(name)
        return self.by_name[name]

    def weight_of(self, i):
        w = self.gens[i].weight
        if w is None:
            return None
        return w

    # -- quadratic form -----------------------------------------------------

    def B_at(self, i, j):
        """B on even Lie generators, by global generator index."""
        pi = self.even_lie.index(i)
        pj = self.even_lie.index(j)
        return self.B[pi][pj]

    def B_inv(self):
        if self._binv is None:
            n = len(self.even_lie)
            aug = [
                [self.B[r][c] for c in range(n)]
                + [Fraction(1) if c == r else Fraction(0) for c in range(n)]
                for r in range(n)
            ]
            from .linalg import rref

            red, pivots = rref(aug, 2 * n)
            if pivots[:n] != list(range(n)):
                raise DomainError("quadratic form is degenerate")
            self._binv = [row[n:] for row in red]
        return self._binv

    def xi_of(self, even_idx):
        """Index of the odd mirror of an even Lie generator."""
        for i, g in enumerate(self.gens):
            if g.kind == "xi" and g.mirror == even_idx:
                return i
        raise DomainError("no odd mirror for generator %s" % self.gens[even_idx].name)

    def d_index(self):
        for i, g in enumerate(self.gens):
            if g.kind == "d":
                return i
        return None

    def c_index(self):
        for i, g in enumerate(self.gens):
            if g.kind == "c":
                return i
        return None

    def root_index(self, vec):
        vec = tuple(Fraction(v) for v in vec)
        for i, w in self.roots.items():
            if w == vec:
                return i
        return None

    def __repr__(self):
        return "SuperLieBasis(%s, %d gens, variant=%s)" % (
            self.name,
            len(self.gens),
            self.variant,
        )


# -- construction from matrices ----------------------------------------------


def _mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [
        [sum((A[i][k] * B[k][j] for k in range(m)), Fraction(0)) for j in range(p)]
        for i in range(n)
    ]


def _mat_comm(A, B):
    AB = _mat_mul(A, B)
    BA = _mat_mul(B, A)
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(AB, BA)]


def _flatten(M):
    return [x for row in M for x in row]


def _even_brackets_from_matrices(named, trace_scale):
    """Bracket table and invariant form for a matrix Lie algebra basis.

    ``named``: list of (name, matrix); brackets must close in the span.
    Returns (coeff table over pairs, B matrix) with B = trace form * scale.
    """
    n = len(named)
    cols = [_flatten(M) for _, M in named]
    dim = len(cols[0])
    rows = [[cols[j][k] for j in range(n)] for k in range(dim)]
    table = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            C = _mat_comm(named[i][1], named[j][1])
            x = solve(rows, _flatten(C), n)
            if x is None:
                raise DomainError(
                    "commutator [%s,%s] escapes the span" % (named[i][0], named[j][0])
                )
            lin = {
                k: GaussRational(c.numerator, 0, c.denominator)
                for k, c in enumerate(x)
                if c
            }
            table[(i, j)] = (lin, GR_ZERO)
    B = [
        [
            trace_scale
            * sum(
                (named[i][1][r][c] * named[j][1][c][r] for r in range(len(named[i][1])) for c in range(len(named[i][1]))),
                Fraction(0),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    return table, B


def _super_extend(name, even_gens, even_table, B, variant, twist_trivial):
    """Attach odd mirrors and (d | c) to an even bracket table."""
    gens = list(even_gens)
    n_even = len(gens)
    for k in range(n_even):
        g = gens[k]
        gens.append(
            Generator(
                name="x·" + g.name,
                parity=1,
                kind="xi",
                weight=g.weight,
                mirror=k,
                degree=1,
            )
        )
    extra = None
    if variant == "tilde":
        extra = Generator(name="d", parity=1, kind="d", weight=tuple(
            Fraction(0) for _ in range(len([g for g in even_gens if g.kind == "cartan"]))
        ), degree=1)
        gens.append(extra)
    elif variant == "quadratic":
        extra = Generator(name="c", parity=0, kind="c", weight=tuple(
            Fraction(0) for _ in range(len([g for g in even_gens if g.kind == "cartan"]))
        ), degree=2)
        gens.append(extra)
    else:
        raise DomainError("unknown variant %r" % variant)
    extra_idx = len(gens) - 1

    table = dict(even_table)
    xi = lambda k: n_even + k
    for i in range(n_even):
        for j in range(n_even):
            # [e_i, xi_j] mirrors [e_i, e_j]
            lin, _ = table.get((i, j), ({}, GR_ZERO))
            table[(i, xi(j))] = ({xi(k): c for k, c in lin.items()}, GR_ZERO)
    for i in range(n_even):
        for j in range(n_even):
            if variant == "tilde":
                table[(xi(i), xi(j))] = ({}, GR_ZERO)
            else:
                b = B[i][j]
                table[(xi(i), xi(j))] = (
                    ({extra_idx: GaussRational(b.numerator, 0, b.denominator)}, GR_ZERO)
                    if b
                    else ({}, GR_ZERO)
                )
    if variant == "tilde":
        d = extra_idx
        for i in range(n_even):
            table[(i, d)] = ({}, GR_ZERO)
            table[(xi(i), d)] = ({i: GR_ONE}, GR_ZERO)
        table[(d, d)] = ({}, GR_ZERO)
    else:
        c = extra_idx
        for i in range(n_even):
            table[(i, c)] = ({}, GR_ZERO)
            table[(xi(i), c)] = ({}, GR_ZERO)
        table[(c, c)] = ({}, GR_ZERO)
    return SuperLieBasis(name, gens, table, B=B, variant=variant, twist_trivial=twist_trivial)


def _root_sorted(cartan_named, root_named, matrices):
    """Order: cartan, then roots by (height, lex)."""

    def height(v):
        return sum(v)

    root_named.sort(key=lambda item: (height(item[1]), item[1]))
    return cartan_named, root_named


def build_from_matrices(name, cartan_mats, root_mats, trace_scale, twist_trivial=False, variant="tilde"):
    """cartan_mats: list (name, matrix); root_mats: list (root_vector, matrix)."""
    root_items = [(tuple(Fraction(x) for x in r), M) for r, M in root_mats]
    root_items.sort(key=lambda item: (sum(item[0]), item[0]))
    named = [(nm, M) for nm, M in cartan_mats]
    gens = [
        Generator(
            name=nm,
            parity=0,
            kind="cartan",
            weight=tuple(Fraction(0) for _ in cartan_mats),
            degree=2,
        )
        for nm, _ in cartan_mats
    ]
    for r, M in root_items:
        named.append(("E%s" % (tuple(map(str, r)),), M))
        gens.append(Generator(name="E" + _vecname(r), parity=0, kind="root", weight=r, degree=2))
    table, B = _even_brackets_from_matrices(
        [(g.name, M) for g, (nm, M) in zip(gens, named)], trace_scale
    )
    return _super_extend(name, gens, table, B, variant, twist_trivial)


def _vecname(vec):
    return "(" + ",".join(str(v) for v in vec) + ")"


# -- presets -------------------------------------------------------------------


def _E(n, i, j):
    return [[Fraction(1) if (r, c) == (i, j) else Fraction(0) for c in range(n)] for r in range(n)]


def _madd(*terms):
    out = None
    for sign, M in terms:
        if out is None:
            out = [[sign * x for x in row] for row in M]
        else:
            out = [[a + sign * b for a, b in zip(ra, rb)] for ra, rb in zip(out, M)]
    return out


def _preset_torus(n, variant):
    gens = [
        Generator(name="H%d" % (i + 1), parity=0, kind="cartan",
                  weight=tuple(Fraction(0) for _ in range(n)), degree=2)
        for i in range(n)
    ]
    table = {(i, j): ({}, GR_ZERO) for i in range(n) for j in range(n) if i != j}
    B = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return _super_extend("torus(%d)" % n, gens, table, B, variant, twist_trivial=(n < 2))


def _preset_sl2(variant):
    H = [[Fraction(1, 2), Fraction(0)], [Fraction(0), Fraction(-1, 2)]]
    E = _E(2, 0, 1)
    F = [[-x / 2 for x in row] for row in _E(2, 1, 0)]
    basis = build_from_matrices(
        "sl2",
        [("H1", H)],
        [((Fraction(1),), E), ((Fraction(-1),), F)],
        trace_scale=Fraction(2),
        twist_trivial=True,
        variant=variant,
    )
    return basis


def _preset_sl3(variant):
    # A2 roots presented inside gl(3): H_i = E_ii, E_{eps_i - eps_j} = E_ij
    # (negative roots carry a -1 so that [E_{-r}, E_r] = sum r_i H_i).
    cart = [("H%d" % (i + 1), _E(3, i, i)) for i in range(3)]
    roots = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            r = [Fraction(0)] * 3
            r[i], r[j] = Fraction(1), Fraction(-1)
            M = _E(3, i, j) if i < j else [[-x for x in row] for row in _E(3, i, j)]
            roots.append((tuple(r), M))
    return build_from_matrices("sl3", cart, roots, trace_scale=Fraction(1), variant=variant)


def _preset_so5(variant):
    # split so(5): x_{ij} = -x_{6-j,6-i} on 5x5 matrices
    def F(i, j):
        return _madd((Fraction(1), _E(5, i - 1, j - 1)), (Fraction(-1), _E(5, 6 - j - 1, 6 - i - 1)))

    h1, h2 = F(1, 1), F(2, 2)
    pos = {
        (Fraction(1), Fraction(-1)): F(1, 2),
        (Fraction(1), Fraction(0)): F(1, 3),
        (Fraction(0), Fraction(1)): F(2, 3),
        (Fraction(1), Fraction(1)): F(1, 4),
    }
    roots = []
    for r, M in pos.items():
        roots.append((r, M))
        neg = tuple(-x for x in r)
        Mt = [[-M[c][r2] for c in range(5)] for r2 in range(5)]  # minus transpose
        roots.append((neg, Mt))
    return build_from_matrices(
        "so5", [("H1", h1), ("H2", h2)], roots, trace_scale=Fraction(1, 2), variant=variant
    )


def _preset_euclid(two_n, variant):
    """Euclidean algebra so(2n) + translations; twist generators are the momenta.

    Realized in the affine (2n+1)-dim representation: P_a is the matrix
    unit in the last column, M_{mu nu} rotates so that
    [M_{mu nu}, P_a] = d_{mu a} P_nu - d_{nu a} P_mu.
    """
    if two_n % 2 or two_n < 2:
        raise UnknownPresetError("euclid(%d): need a positive even dimension" % two_n)
    n = two_n
    gens = []
    named = []
    for a in range(n):
        gens.append(
            Generator(name="P%d" % (a + 1), parity=0, kind="cartan",
                      weight=tuple(Fraction(0) for _ in range(n)), degree=2)
        )
        named.append(("P%d" % (a + 1), _E(n + 1, a, n)))
    for mu in range(n):
        for nu in range(mu + 1, n):
            gens.append(Generator(name="M%d%d" % (mu + 1, nu + 1), parity=0,
                                  kind="even", weight=None, degree=2))
            named.append(("M", _madd((Fraction(1), _E(n + 1, nu, mu)),
                                     (Fraction(-1), _E(n + 1, mu, nu)))))
    table, _ = _even_brackets_from_matrices(named, Fraction(1))
    # no invariant form survives on the translation ideal; the preset only
    # backs coproduct checks, never a Weil algebra
    if variant != "tilde":
        raise DomainError("euclid presets exist only in the tilde variant")
    return _super_extend("euclid(%d)" % n, gens, table, None, variant, twist_trivial=False)


def load_preset(name, variant="tilde"):
    """Presets: sl2, sl3, so5, torus(n), euclid(2n).

    Rank-1 presets come back flagged ``twist_trivial`` (a one-generator
    abelian twist is a coboundary).  ``euclid`` backs the Moyal-rotation
    coproduct check; its quadratic form is a placeholder and it is not
    meant as a Weil-algebra base.
    """
    name = name.strip()
    if name == "sl2":
        basis = _preset_sl2(variant)
    elif name == "sl3":
        basis = _preset_sl3(variant)
    elif name == "so5":
        basis = _preset_so5(variant)
    elif name.startswith("torus(") and name.endswith(")"):
        basis = _preset_torus(int(name[6:-1]), variant)
    elif name.startswith("euclid(") and name.endswith(")"):
        basis = _preset_euclid(int(name[7:-1]), variant)
    else:
        raise UnknownPresetError(name)
    report = validate(basis)
    if not report.ok():
        raise DomainError("preset %s failed validation:\n%s" % (name, report))
    return basis


PRESET_NAMES = ("sl2", "sl3", "so5", "torus(n)", "euclid(2n)")


# -- validation ----------------------------------------------------------------


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)  # (family, ok, detail)

    def add(self, family, ok, detail=""):
        self.checks.append((family, ok, detail))

    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(f, d) for f, ok, d in self.checks if not ok]

    def __str__(self):
        lines = []
        for family, ok, detail in self.checks:
            lines.append("%-24s %s%s" % (family, "ok" if ok else "FAIL", "  " + detail if detail else ""))
        return "\n".join(lines)


def _bracket_combo(basis, lin_const_1, i):
    """[linear combination, gen_i] for (dict, const) input."""
    lin, const = lin_const_1
    out = {}
    out_const = GR_ZERO
    for k, c in lin.items():
        l2, c2 = basis.bracket(k, i)
        for k2, c3 in l2.items():
            out[k2] = out.get(k2, GR_ZERO) + c * c3
        out_const = out_const + c * c2
    return {k: v for k, v in out.items() if v}, out_const


def validate(basis: SuperLieBasis) -> ValidationReport:
    """Exhaustive identity checks on the bracket table and form."""
    rep = ValidationReport()
    n = len(basis.gens)

    bad = []
    for i in range(n):
        for j in range(n):
            lij, cij = basis.bracket(i, j)
            lji, cji = basis.bracket(j, i)
            sign = GaussRational(-1) if basis.parity(i) * basis.parity(j) == 0 else GR_ONE
            want = ({k: sign * c for k, c in lji.items() if sign * c}, sign * cji)
            got = ({k: c for k, c in lij.items() if c}, cij)
            if got != want:
                bad.append((basis.gens[i].name, basis.gens[j].name))
    rep.add("antisymmetry", not bad, str(bad[:3]))

    bad = []
    for i in range(n):
        pi = basis.parity(i)
        for j in range(n):
            pj = basis.parity(j)
            for k in range(n):
                pk = basis.parity(k)
                acc = {}
                acc_const = GR_ZERO

                def accumulate(sign_exp, a, bc_pair):
                    nonlocal acc_const
                    lin, const = _bracket_combo_left(basis, a, bc_pair)
                    s = GaussRational(-1) if sign_exp % 2 else GR_ONE
                    for kk, c in lin.items():
                        acc[kk] = acc.get(kk, GR_ZERO) + s * c
                    acc_const = acc_const + s * const

                accumulate(pi * pk, i, basis.bracket(j, k))
                accumulate(pj * pi, j, basis.bracket(k, i))
                accumulate(pk * pj, k, basis.bracket(i, j))
                if any(v for v in acc.values()) or acc_const:
                    bad.append(
                        (basis.gens[i].name, basis.gens[j].name, basis.gens[k].name)
                    )
    rep.add("graded jacobi", not bad, str(bad[:3]))

    bad = []
    for hi, h in enumerate(basis.cartan):
        for i, g in enumerate(basis.gens):
            if g.weight is None:
                continue
            lin, const = basis.bracket(h, i)
            want_c = g.weight[hi]
            want = (
                {i: GaussRational(want_c.numerator, 0, want_c.denominator)}
                if want_c
                else {}
            )
            if const or {k: v for k, v in lin.items() if v} != want:
                bad.append((basis.gens[h].name, g.name))
    rep.add("weight property", not bad, str(bad[:3]))

    if basis.B is not None:
        bad = []
        ev = basis.even_lie
        for x in ev:
            for yi, y in enumerate(ev):
                for zi, z in enumerate(ev):
                    # B([x,y],z) + B(y,[x,z]) = 0
                    lxy, _ = basis.bracket(x, y)
                    lxz, _ = basis.bracket(x, z)
                    s = GR_ZERO
                    for k, c in lxy.items():
                        if k in ev:
                            b = basis.B[ev.index(k)][zi]
                            s = s + c * GaussRational(b.numerator, 0, b.denominator)
                    for k, c in lxz.items():
                        if k in ev:
                            b = basis.B[yi][ev.index(k)]
                            s = s + c * GaussRational(b.numerator, 0, b.denominator)
                    if s:
                        bad.append((basis.gens[x].name, basis.gens[y].name, basis.gens[z].name))
        rep.add("B ad-invariance", not bad, str(bad[:3]))
        from .linalg import rank

        rep.add("B nondegenerate", rank(basis.B, len(ev)) == len(ev))

    bad = []
    for i, r in basis.roots.items():
        neg = tuple(-x for x in r)
        j = basis.root_index(neg)
        if j is None:
            bad.append(basis.gens[i].name)
            continue
        lin, const = basis.bracket(j, i)
        want = {}
        for hi, h in enumerate(basis.cartan):
            if r[hi]:
                want[h] = GaussRational(r[hi].numerator, 0, r[hi].denominator)
        if const or {k: v for k, v in lin.items() if v} != want:
            bad.append(basis.gens[i].name)
    rep.add("opposite root pairing", not bad, str(bad[:3]))
    return rep


def _bracket_combo_left(basis, i, lin_const):
    """[gen_i, linear combination + const] -> (dict, const)."""
    lin, const = lin_const
    out = {}
    out_const = GR_ZERO
    for k, c in lin.items():
        l2, c2 = basis.bracket(i, k)
        for k2, c3 in l2.items():
            out[k2] = out.get(k2, GR_ZERO) + c * c3
        out_const = out_const + c * c2
    return {k: v for k, v in out.items() if v}, out_const
