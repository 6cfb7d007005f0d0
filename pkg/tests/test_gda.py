"""Star products, braided commutativity, Leibniz rules, GDA presets."""

import random
from fractions import Fraction

import pytest

from ncweil.errors import DomainError, UnknownPresetError, WindowOverflowError
from ncweil.gda import (
    BraidedTensorAlgebra,
    GdaElement,
    act_lambda,
    act_u,
    braided_comm_check,
    classical_weil_presentation,
    covariance_check,
    leibniz_checks,
    lemma_l1_check,
    load_gda_preset,
    preset_torus_forms,
    star,
    star_associativity_check,
    validate_gda,
)
from ncweil.hopf import HopfAlgebra, TwistData
from ncweil.liealg import load_preset
from ncweil.pbw import ENVELOPING, Algebra
from ncweil.scalars import TruncSeries

N = 4
J2 = [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]]


@pytest.fixture(scope="module")
def torus_setup():
    pres = load_gda_preset("torus_forms(2)", N)
    alg = Algebra(pres.acting, ENVELOPING, N)
    twist = TwistData(HopfAlgebra(alg), J2)
    return pres, twist


@pytest.fixture(scope="module")
def weil_gda_setup(sl3_tilde):
    pres = classical_weil_presentation(sl3_tilde, N)
    alg = Algebra(sl3_tilde, ENVELOPING, N)
    twist = TwistData(HopfAlgebra(alg), J2)
    return pres, twist


def test_point_preset():
    pt = load_gda_preset("point", N)
    assert pt.one().terms == {(): TruncSeries.one(N)}
    assert pt.d(pt.one()).is_zero()
    assert pt.window_monomials(3, 3) == [()]


def test_torus_forms_preset_structure(torus_setup):
    pres, _ = torus_setup
    assert validate_gda(pres, 2, 2).ok()
    u1, du1 = pres.gen("u1"), pres.gen("du1")
    assert pres.d(u1) == du1
    h1 = pres.acting.cartan[0]
    assert pres.i(h1, du1) == u1
    assert pres.i(h1, pres.gen("du2")).is_zero()
    inv = pres.monomial({"u1": -1})
    assert u1.wedge(inv) == pres.one()
    assert pres.mono_weight(next(iter(inv.terms))) == (Fraction(-1), Fraction(0))


def test_unknown_gda_preset():
    with pytest.raises(UnknownPresetError):
        load_gda_preset("mystery", N)


def test_star_weight_phase(torus_setup):
    pres, twist = torus_setup
    u1, u2 = pres.gen("u1"), pres.gen("u2")
    q = twist.q((1, 0), (0, 1))
    assert star(u1, u2, twist) == u1.wedge(u2).scale(q)
    assert star(u1, u2, twist) == star(u2, u1, twist).scale(q * q)


def test_invariant_elements_star_plainly(torus_setup):
    pres, twist = torus_setup
    w0 = pres.monomial({"u1": 1}).wedge(pres.monomial({"u1": -1}))  # the unit
    eta = pres.gen("du1").wedge(pres.gen("u2"))
    assert star(w0, eta, twist) == eta
    inv_form = pres.monomial({"u1": -1, "du1": 1})  # weight zero
    assert star(inv_form, eta, twist) == inv_form.wedge(eta)


def test_star_theta_zero_is_wedge(torus_setup):
    pres, twist = torus_setup
    rng = random.Random(2)
    monos = pres.window_monomials(2, 2)
    for _ in range(30):
        a = GdaElement(pres, {rng.choice(monos): TruncSeries.one(N)})
        b = GdaElement(pres, {rng.choice(monos): TruncSeries.one(N)})
        assert pres.theta_zero(star(a, b, twist)) == a.wedge(b)


def test_star_conventions_differ_by_i(torus_setup):
    pres, twist = torus_setup
    u1, u2 = pres.gen("u1"), pres.gen("u2")
    iso = star(u1, u2, twist, convention="isospectral")
    real = star(u1, u2, twist, convention="real")
    ((m_i, c_i),) = list(iso.terms.items())
    ((m_r, c_r),) = list(real.terms.items())
    assert m_i == m_r
    assert c_i.coeffs[1].re == 0 and c_i.coeffs[1].im != 0
    assert c_r.coeffs[1].im == 0 and c_r.coeffs[1].re != 0


def test_star_associativity_small_window(torus_setup):
    pres, twist = torus_setup
    ok, witness = star_associativity_check(pres, twist, 1, 2)
    assert ok, witness


def test_braided_commutativity_and_l1(torus_setup):
    pres, twist = torus_setup
    ok, wit = braided_comm_check(pres, twist, 2, 2)
    assert ok, wit
    ok, wit = lemma_l1_check(pres, twist, 2, 2)
    assert ok, wit


def test_braided_commutativity_trivial_twist(torus_setup):
    pres, _ = torus_setup
    alg = Algebra(pres.acting, ENVELOPING, N)
    triv = TwistData(HopfAlgebra(alg), [[Fraction(0)] * 2 for _ in range(2)])
    ok, wit = braided_comm_check(pres, triv, 1, 2)
    assert ok, wit


def test_leibniz_cartan_rules(torus_setup):
    pres, twist = torus_setup
    ok, fails = leibniz_checks(pres, twist)
    assert ok, fails


def test_leibniz_root_rules(weil_gda_setup):
    pres, twist = weil_gda_setup
    ok, fails = leibniz_checks(pres, twist)
    assert ok, fails


def test_covariance_module_algebra_axiom(weil_gda_setup):
    pres, twist = weil_gda_setup
    alg = twist.algebra
    rng = random.Random(17)
    gens = [g.name for g in pres.gens]
    lie = [g.name for g in alg.basis.gens]
    for _ in range(8):
        h = alg.from_word([rng.choice(lie) for _ in range(rng.randint(1, 2))])
        a = pres.gen(rng.choice(gens))
        b = pres.gen(rng.choice(gens))
        assert covariance_check(pres, twist, h, a, b, twisted=False)
        assert covariance_check(pres, twist, h, a, b, twisted=True)


def test_act_evaluates_weights(torus_setup):
    pres, twist = torus_setup
    alg = twist.algebra
    h1 = alg.gen("H1")
    u1 = pres.gen("u1")
    assert act_u(pres, h1, u1) == u1
    assert act_u(pres, h1, pres.gen("u2")).is_zero()
    lam = act_lambda(pres, twist, (Fraction(1), Fraction(0)), pres.gen("u2"))
    assert lam == pres.gen("u2").scale(twist.q((1, 0), (0, 1)))


def test_act_d_leibniz(torus_setup):
    pres, twist = torus_setup
    alg = twist.algebra
    d = alg.gen("d")
    a = pres.gen("u1")
    b = pres.gen("du2")
    lhs = act_u(pres, d, a.wedge(b))
    rhs = pres.d(a).wedge(b) + a.wedge(pres.d(b))  # |a| even
    assert lhs == rhs


def test_classical_weil_gda_validates(sl2_tilde, sl3_tilde):
    for basis, D in ((sl2_tilde, 4), (sl3_tilde, 2)):
        pres = classical_weil_presentation(basis, N)
        rep = validate_gda(pres, D, 2)
        assert rep.ok(), str(rep)


def test_hard_window_overflow(torus_setup):
    pres, twist = torus_setup
    bounded = preset_torus_forms(2, N)
    bounded.hard_window = (2, 1)
    u1 = bounded.gen("u1")
    with pytest.raises(WindowOverflowError):
        u1.wedge(u1)


def test_braided_tensor_product(torus_setup):
    pres, twist = torus_setup
    bt = BraidedTensorAlgebra(pres, pres, twist)
    rng = random.Random(4)
    monos = pres.window_monomials(1, 2)

    def rand_pair():
        a = GdaElement(pres, {rng.choice(monos): TruncSeries.one(N)})
        b = GdaElement(pres, {rng.choice(monos): TruncSeries.one(N)})
        return bt.element(a, b)

    # associativity on random triples
    for _ in range(50):
        x, y, z = rand_pair(), rand_pair(), rand_pair()
        lhs = bt.multiply(bt.multiply(x, y), z)
        rhs = bt.multiply(x, bt.multiply(y, z))
        assert lhs == rhs
    # trivial twist: ordinary graded tensor product
    alg = Algebra(pres.acting, ENVELOPING, N)
    triv = TwistData(HopfAlgebra(alg), [[Fraction(0)] * 2 for _ in range(2)])
    bt0 = BraidedTensorAlgebra(pres, pres, triv)
    a, b = pres.gen("du1"), pres.gen("du2")
    x = bt0.element(a, b)
    y = bt0.element(b, a)
    got = bt0.multiply(x, y)
    # (du1 (x) du2)(du2 (x) du1) = -(du1 du2) (x) (du2 du1): Koszul sign |du2||du2|
    want_left = a.wedge(b)
    want_right = b.wedge(a)
    want = {}
    for mL, cL in want_left.terms.items():
        for mR, cR in want_right.terms.items():
            want[(mL, mR)] = -(cL * cR)
    assert got == want


def test_braided_tensor_covariance(torus_setup):
    from ncweil.pbw import AlgebraElement, monomial_parity
    from ncweil.scalars import GaussRational

    pres, twist = torus_setup
    bt = BraidedTensorAlgebra(pres, pres, twist)
    alg = twist.algebra
    rng = random.Random(12)
    monos = pres.window_monomials(1, 1)
    lie = [g.name for g in alg.basis.gens]

    def rand_pair():
        return bt.element(
            GdaElement(pres, {rng.choice(monos): TruncSeries.one(N)}),
            GdaElement(pres, {rng.choice(monos): TruncSeries.one(N)}),
        )

    for _ in range(6):
        h = alg.gen(rng.choice(lie))
        x, y = rand_pair(), rand_pair()
        lhs = bt.act(h, bt.multiply(x, y))
        rhs = {}
        for (m1, m2), c in twist.twisted_coproduct(h).terms.items():
            x1 = bt.act(AlgebraElement(alg, {m1: TruncSeries.one(N)}), x)
            y1 = bt.act(AlgebraElement(alg, {m2: TruncSeries.one(N)}), y)
            sgn = 1
            if monomial_parity(m2):
                px = {
                    (pres.mono_parity(ma) + pres.mono_parity(mb)) % 2
                    for (ma, mb) in x.keys()
                }
                assert len(px) == 1
                if px.pop():
                    sgn = -1
            for k, c2 in bt.multiply(x1, y1).items():
                add = (c * c2).scalar_mul(GaussRational(sgn))
                prev = rhs.get(k)
                rhs[k] = add if prev is None else prev + add
        rhs = {k: c for k, c in rhs.items() if not c.is_zero()}
        assert lhs == rhs


def test_moyal_rotations_check_only():
    preset = load_gda_preset("moyal_rotations(2)", N)
    assert preset.check_only
    ok, witness = preset.run_check([[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]])
    assert ok, witness


def test_moyal_rotations_dim4():
    preset = load_gda_preset("moyal_rotations(4)", 2)
    theta = [[Fraction(0)] * 4 for _ in range(4)]
    theta[0][1], theta[1][0] = Fraction(1), Fraction(-1)
    theta[2][3], theta[3][2] = Fraction(2), Fraction(-2)
    ok, witness = preset.run_check(theta)
    assert ok, witness
