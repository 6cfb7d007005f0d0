"""Classical, nc and twisted Weil algebras: generator calculus.

Mechanical evaluation (inner adjoints, commutator with D, deformed
adjoints) versus the closed tables for horizontal and quantum
generators.
"""

import random
from fractions import Fraction

import pytest

from ncweil.liealg import load_preset
from ncweil.pbw import AlgebraElement, monomial_parity
from ncweil.scalars import GaussRational, TruncSeries
from ncweil.weil import (
    AbelianPhases,
    ClassicalWeil,
    NcWeil,
    TwistedWeil,
    _gr,
    expected_dK,
    expected_deta,
    expected_quantum_action,
    expected_quantum_bracket,
)

N = 4
J2 = [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]]


@pytest.fixture(scope="module")
def cw(sl2_tilde):
    return ClassicalWeil(sl2_tilde, N)


@pytest.fixture(scope="module")
def nc3(sl3_quad):
    return NcWeil(sl3_quad, N)


@pytest.fixture(scope="module")
def tw3(nc3):
    return TwistedWeil(nc3, AbelianPhases(nc3.algebra, J2))


# -- classical ------------------------------------------------------------------


def test_classical_koszul_tables(cw):
    b = cw.basis
    for a in b.even_lie:
        assert cw.d(cw.e_dual(a)).is_zero()
        assert cw.d(cw.th_dual(a)) == cw.e_dual(a)
        for c in b.even_lie:
            got = cw.i(a, cw.th_dual(c))
            want = cw.pres.one() if a == c else cw.pres.zero()
            assert got == want


def test_classical_horizontal_generators(cw):
    b = cw.basis
    for a in b.even_lie:
        u = cw.horizontal(a)
        for c in b.even_lie:
            assert cw.i(c, u).is_zero()
        # L_c(u^a) = -f_{cb}^a u^b
        for c in b.even_lie:
            want = cw.pres.zero()
            for bb in b.even_lie:
                lin, _ = b.bracket(c, bb)
                coef = lin.get(a)
                if coef:
                    want = want - cw.horizontal(bb).scale(coef)
            assert cw.L(c, u) == want
        # d(th^a) = u^a - (1/2) f_bc^a th^b th^c
        corr = cw.pres.zero()
        for bb in b.even_lie:
            for c in b.even_lie:
                lin, _ = b.bracket(bb, c)
                coef = lin.get(a)
                if coef:
                    corr = corr + cw.th_dual(bb).wedge(cw.th_dual(c)).scale(
                        coef * GaussRational(1, 0, 2)
                    )
        assert cw.d(cw.th_dual(a)) == u - corr
        # d(u^a) = -f_bc^a th^b u^c
        want = cw.pres.zero()
        for bb in b.even_lie:
            for c in b.even_lie:
                lin, _ = b.bracket(bb, c)
                coef = lin.get(a)
                if coef:
                    want = want - cw.th_dual(bb).wedge(cw.horizontal(c)).scale(coef)
        assert cw.d(u) == want


def test_classical_d_squares_to_zero(cw):
    rng = random.Random(1)
    monos = cw.pres.window_monomials(5, 3)
    for _ in range(25):
        x = cw.pres.zero()
        for _ in range(2):
            m = rng.choice(monos)
            x = x + type(x)(cw.pres, {m: TruncSeries.one(N)})
        assert cw.d(cw.d(x)).is_zero()


# -- noncommutative ---------------------------------------------------------------


def test_nc_koszul_differential(nc3):
    for a in nc3._ev:
        assert nc3.d(nc3.xi(a)) == nc3.e(a)
        assert nc3.d(nc3.e(a)).is_zero()


def test_nc_interior_on_generators(nc3):
    for a in nc3._ev[:5]:
        for b in nc3._ev[:5]:
            assert nc3.i(a, nc3.xi(b)) == nc3.algebra.one().scale(_gr(nc3.B(a, b)))
    for a in nc3._ev:
        for b in nc3._ev:
            assert nc3.i(a, nc3.u(b)).is_zero()


def test_nc_horizontal_relations(nc3):
    alg = nc3.algebra
    for a in nc3._ev:
        for b in nc3._ev:
            assert nc3.u(a).super_commutator(nc3.xi(b)).is_zero()
            lin, _ = nc3.basis.bracket(a, b)
            want = alg.zero()
            for c, coef in lin.items():
                want = want + nc3.u(c).scale(coef)
            assert nc3.u(a).super_commutator(nc3.u(b)) == want


def test_nc_xi_clifford(nc3):
    for a in nc3._ev[:4]:
        for b in nc3._ev[:4]:
            anti = nc3.xi(a) * nc3.xi(b) + nc3.xi(b) * nc3.xi(a)
            assert anti == nc3.algebra.one().scale(_gr(nc3.B(a, b)))


def _random_filtration4(nc, rng):
    idxs = [i for i in range(len(nc.basis.gens)) if nc.algebra.active(i)]
    x = nc.algebra.zero()
    while True:
        word = []
        budget = 4
        while budget > 0 and rng.random() < 0.8:
            g = rng.choice(idxs)
            cost = nc.basis.gens[g].degree
            if cost <= budget:
                word.append(g)
                budget -= cost
        coeff = TruncSeries(
            [Fraction(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(N + 1)], N
        )
        x = x + nc.algebra.from_word(word, coeff)
        if rng.random() < 0.5:
            return x


def test_nc_differential_squares_to_zero(nc3):
    for a in nc3._ev:
        assert nc3.d(nc3.d(nc3.e(a))).is_zero()
        assert nc3.d(nc3.d(nc3.xi(a))).is_zero()
        assert nc3.d(nc3.d(nc3.u(a))).is_zero()
    rng = random.Random(42)
    for _ in range(50):
        x = _random_filtration4(nc3, rng)
        assert nc3.d(nc3.d(x)).is_zero()


def test_nc_D_is_invariant(nc3):
    D = nc3.D_element()
    for a in nc3._ev:
        assert nc3.L(a, D).is_zero()


# -- twisted --------------------------------------------------------------------------


def test_twisted_cartan_ops_undeformed(nc3, tw3):
    x = nc3.e(nc3._ev[3]) * nc3.xi(nc3._ev[0])
    for h in nc3.basis.cartan:
        assert tw3.L(h, x) == nc3.L(h, x)
        assert tw3.i(h, x) == nc3.i(h, x)


def test_twisted_quantum_action_tables(nc3, tw3):
    for a in nc3._ev:
        for b in nc3._ev:
            assert tw3.L(a, tw3.X(b)) == expected_quantum_action(tw3, "L_X", a, b)
            assert tw3.i(a, tw3.X(b)) == expected_quantum_action(tw3, "i_X", a, b)
            assert tw3.L(a, tw3.eta(b)) == expected_quantum_action(tw3, "L_eta", a, b)
            assert tw3.i(a, tw3.eta(b)) == expected_quantum_action(tw3, "i_eta", a, b)
            assert tw3.i(a, tw3.K(b)) == expected_quantum_action(tw3, "i_K", a, b)
            assert tw3.L(a, tw3.K(b)) == expected_quantum_action(tw3, "L_K", a, b)


def test_twisted_root_ops_on_cartan_generators(nc3, tw3):
    # L_r(e_i) = -r_i lambda_r e_r ; i_r(xi_i) = 0
    for ridx, r in nc3.basis.roots.items():
        lam = tw3.lam_of(ridx)
        for hp, h in enumerate(nc3.basis.cartan):
            got = tw3.L(ridx, nc3.e(h))
            want = (lam * nc3.e(ridx)).scale(_gr(-r[hp]))
            assert got == want
            assert tw3.i(ridx, nc3.xi(h)).is_zero()


def test_twisted_dK_and_deta(nc3, tw3):
    for a in nc3._ev:
        assert tw3.d(tw3.K(a)) == expected_dK(tw3, a)
        assert tw3.d(tw3.eta(a)) == expected_deta(tw3, a)


def test_D_two_expressions_agree(nc3, tw3):
    assert nc3.D_element() == nc3.D_quantum_form(tw3.phases)


def test_quantum_bracket_table(nc3, tw3):
    for a in nc3._ev:
        for b in nc3._ev:
            assert tw3.quantum_bracket(a, b) == expected_quantum_bracket(tw3, a, b)


def test_quantum_bracket_q_antisymmetry(nc3, tw3):
    b = nc3.basis
    r = b.root_index((Fraction(1), Fraction(-1), Fraction(0)))
    s = b.root_index((Fraction(0), Fraction(1), Fraction(-1)))
    lin, _ = b.bracket(r, s)
    cidx = b.root_index((Fraction(1), Fraction(0), Fraction(-1)))
    q = tw3.phases.q((1, -1, 0), (0, 1, -1))
    want = tw3.X(cidx).scale(lin[cidx]).scale(q.invert()).scale(GaussRational(-1))
    assert tw3.quantum_bracket(s, r) == want


def test_rel1_inside_weil_algebra(nc3, tw3):
    b = nc3.basis
    roots = list(b.roots.items())
    for ridx, r in roots[:3]:
        for sidx, s in roots[:3]:
            lam_r = tw3.lam_of(ridx)
            q = tw3.phases.q(r, s)
            assert lam_r * nc3.e(sidx) == (nc3.e(sidx) * lam_r).scale(q)
            assert lam_r * nc3.xi(sidx) == (nc3.xi(sidx) * lam_r).scale(q)


def test_theta_zero_collapses_to_nc(nc3, tw3):
    rng = random.Random(8)
    for _ in range(10):
        x = _random_filtration4(nc3, rng).theta_zero()
        for ridx in list(nc3.basis.roots)[:2]:
            assert tw3.L(ridx, x).theta_zero() == nc3.L(ridx, x)
            assert tw3.i(ridx, x).theta_zero() == nc3.i(ridx, x)
    for a in nc3._ev:
        assert tw3.X(a).theta_zero() == nc3.e(a)
        assert tw3.eta(a).theta_zero() == nc3.xi(a)
        assert tw3.K(a).theta_zero() == nc3.u(a)


def test_twisted_ops_satisfy_classical_relations(nc3, tw3):
    """Operator identities [L,L], [L,i], [i,i]+, [L,d], [i,d]+, d^2 with the
    undeformed structure constants, on filtration <= 3 samples."""
    rng = random.Random(77)
    b = nc3.basis
    samples = []
    idxs = [i for i in range(len(b.gens)) if nc3.algebra.active(i)]
    for _ in range(6):
        word = []
        budget = 3
        while budget > 0 and rng.random() < 0.75:
            g = rng.choice(idxs)
            if b.gens[g].degree <= budget:
                word.append(g)
                budget -= b.gens[g].degree
        samples.append(nc3.algebra.from_word(word))
    pick = list(b.roots)[:2] + b.cartan[:1]
    for a in pick:
        for c in pick:
            lin, _ = b.bracket(a, c)
            for x in samples:
                got = tw3.L(a, tw3.L(c, x)) - tw3.L(c, tw3.L(a, x))
                want = nc3.algebra.zero()
                for k, coef in lin.items():
                    want = want + tw3.L(k, x).scale(coef)
                assert got == want
                got = tw3.L(a, tw3.i(c, x)) - tw3.i(c, tw3.L(a, x))
                want = nc3.algebra.zero()
                for k, coef in lin.items():
                    want = want + tw3.i(k, x).scale(coef)
                assert got == want
                got = tw3.i(a, tw3.i(c, x)) + tw3.i(c, tw3.i(a, x))
                assert got.is_zero()
    for a in pick:
        for x in samples:
            assert tw3.L(a, tw3.d(x)) == tw3.d(tw3.L(a, x))
            assert tw3.i(a, tw3.d(x)) + tw3.d(tw3.i(a, x)) == tw3.L(a, x)
            assert tw3.d(tw3.d(x)).is_zero()


def test_mixed_group_likes_exposed(tw3):
    mg = tw3.mixed_group_likes()
    assert set(mg) == {"Lambda1", "Lambda2"}
    for lam in mg.values():
        assert lam.theta_zero() == tw3.nc.algebra.one()


def test_so5_quantum_brackets():
    bq = load_preset("so5", variant="quadratic")
    nc = NcWeil(bq, N)
    tw = TwistedWeil(nc, AbelianPhases(nc.algebra, J2))
    # short + short -> long root bracket carries the q factor
    r = bq.root_index((Fraction(1), Fraction(0)))
    s = bq.root_index((Fraction(0), Fraction(1)))
    assert tw.quantum_bracket(r, s) == expected_quantum_bracket(tw, r, s)
    assert tw.quantum_bracket(s, r) == expected_quantum_bracket(tw, s, r)
    neg = bq.root_index((Fraction(-1), Fraction(0)))
    assert tw.quantum_bracket(neg, r) == expected_quantum_bracket(tw, neg, r)
