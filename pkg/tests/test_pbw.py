"""PBW engine: relations, canonicality, associativity, tensor signs.

The reordering oracle evaluates words in the defining matrix
representation: the normal form of a word, evaluated matrix-wise, must
reproduce the plain matrix product of the word (order-free evaluation).
"""

import random
from fractions import Fraction

import pytest

from ncweil.errors import DomainError, UnknownGeneratorError
from ncweil.liealg import load_preset
from ncweil.pbw import (
    ENVELOPING,
    WEIL,
    Algebra,
    AlgebraElement,
    ad_action,
    monomial_to_word,
)
from ncweil.scalars import TruncSeries
from ncweil.tensorsq import TensorElement, tensor_exp

N = 4


def test_dd_is_zero(U_sl3):
    d = U_sl3.basis.d_index()
    assert U_sl3.from_word([d, d]).is_zero()


def test_odd_square_in_weil_mode(W_sl3):
    b = W_sl3.basis
    xiH = b.xi_of(b.index("H1"))
    sq = W_sl3.from_word([xiH, xiH])
    # [xi,xi] = B_11 * c with c = 1, so the square is B_11/2 = 1/2
    assert sq == W_sl3.one().scale(Fraction(1, 2))
    r = b.root_index((1, -1, 0))
    xr = b.xi_of(r)
    assert W_sl3.from_word([xr, xr]).is_zero()  # B(E_r, E_r) = 0


def test_bracket_compatibility_all_pairs(U_sl3, W_sl3):
    for alg in (U_sl3, W_sl3):
        b = alg.basis
        idxs = [i for i in range(len(b.gens)) if alg.active(i)]
        for i in idxs:
            for j in idxs:
                x, y = alg.gen(i), alg.gen(j)
                lin, const = alg.bracket(i, j)
                want = alg.zero()
                for k, c in lin.items():
                    want = want + alg.gen(k).scale(c)
                want = want + alg.one().scale(const)
                assert x.super_commutator(y) == want, (b.gens[i].name, b.gens[j].name)


def _mat_mul(A, B):
    n = len(A)
    return [
        [sum((A[i][k] * B[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def _sl2_matrices():
    H = [[Fraction(1, 2), Fraction(0)], [Fraction(0), Fraction(-1, 2)]]
    E = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]
    F = [[Fraction(0), Fraction(0)], [Fraction(-1, 2), Fraction(0)]]
    return {"H1": H, "E(1)": E, "E(-1)": F}


def _word_to_matrix(words_mats, word):
    out = [[Fraction(1 if i == j else 0) for j in range(2)] for i in range(2)]
    for w in word:
        out = _mat_mul(out, words_mats[w])
    return out


def test_reordering_matches_matrix_representation(U_sl2):
    mats = _sl2_matrices()
    b = U_sl2.basis
    even_names = [g.name for g in b.gens if g.kind in ("cartan", "root")]
    rng = random.Random(7)
    for _ in range(80):
        word = [rng.choice(even_names) for _ in range(rng.randint(1, 5))]
        elem = U_sl2.from_word(word)
        direct = _word_to_matrix(mats, word)
        recomposed = [[Fraction(0)] * 2 for _ in range(2)]
        for mono, coeff in elem.terms.items():
            c = coeff.constant_term()
            assert c.im == 0
            mword = [b.gens[i].name for i in monomial_to_word(mono)]
            m = _word_to_matrix(mats, mword)
            for r in range(2):
                for s in range(2):
                    recomposed[r][s] += c.re * m[r][s]
        assert recomposed == direct, word


def test_multiply_unit(U_sl3):
    x = U_sl3.from_word(["H1", "E(1,-1,0)", "x·H2"])
    assert x * U_sl3.one() == x
    assert U_sl3.one() * x == x


def _random_element(alg, rng, max_len=3, nterms=2):
    idxs = [i for i in range(len(alg.basis.gens)) if alg.active(i)]
    out = alg.zero()
    for _ in range(nterms):
        word = [rng.choice(idxs) for _ in range(rng.randint(0, max_len))]
        coeff = TruncSeries(
            [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(N + 1)], N
        )
        out = out + alg.from_word(word, coeff)
    return out


@pytest.mark.parametrize("mode", ["enveloping", "weil"])
def test_associativity_random_triples(mode, sl3_tilde, sl3_quad):
    basis = sl3_tilde if mode == ENVELOPING else sl3_quad
    alg = Algebra(basis, mode, N)
    rng = random.Random(11)
    for _ in range(100):
        x = _random_element(alg, rng)
        y = _random_element(alg, rng)
        z = _random_element(alg, rng)
        assert (x * y) * z == x * (y * z)


def test_normal_form_idempotent(W_sl3):
    rng = random.Random(3)
    for _ in range(20):
        x = _random_element(W_sl3, rng)
        # re-normalizing each monomial changes nothing
        again = W_sl3.zero()
        for m, c in x.terms.items():
            again = again + W_sl3.from_word(list(monomial_to_word(m)), c)
        assert again == x


def test_unknown_generator_rejected(U_sl3):
    with pytest.raises(UnknownGeneratorError):
        U_sl3.from_word(["nope"])
    with pytest.raises(UnknownGeneratorError):
        U_sl3.from_word([99])


def test_filtration_degrees(U_sl3, W_sl3):
    assert U_sl3.one().filtration_degree() == 0
    assert U_sl3.gen("x·H1").filtration_degree() == 1
    assert U_sl3.gen("H1").filtration_degree() == 2
    assert U_sl3.gen("d").filtration_degree() == 1
    with pytest.raises(DomainError):
        U_sl3.zero().filtration_degree()
    x = W_sl3.gen("E(1,-1,0)") * W_sl3.gen("x·H1") * W_sl3.gen("x·H2")
    assert x.filtration_degree() == 4


def test_weights(U_sl3):
    r = (Fraction(1), Fraction(-1), Fraction(0))
    e = U_sl3.gen("E(1,-1,0)")
    assert e.weight() == r
    prod = e * U_sl3.gen("E(0,1,-1)")
    assert prod.weight() == (Fraction(1), Fraction(0), Fraction(-1))
    assert U_sl3.one().weight() == (0, 0, 0)


def test_ad_action_matches_bracket(U_sl3):
    b = U_sl3.basis
    for nm1 in ("H1", "E(1,-1,0)", "x·H2", "d"):
        for nm2 in ("H2", "E(-1,1,0)", "x·E(1,-1,0)", "d"):
            i, j = b.index(nm1), b.index(nm2)
            lin, const = U_sl3.bracket(i, j)
            want = U_sl3.zero()
            for k, c in lin.items():
                want = want + U_sl3.gen(k).scale(c)
            want = want + U_sl3.one().scale(const)
            assert ad_action(U_sl3.gen(i), U_sl3.gen(j)) == want


# -- tensor squares ---------------------------------------------------------------


def test_tensor_unit(U_sl3):
    t = TensorElement.from_factors(U_sl3.gen("x·H1"), U_sl3.gen("E(1,-1,0)"))
    assert TensorElement.unit(U_sl3, 2) * t == t


def test_tensor_koszul_sign(U_sl3):
    xi_a = U_sl3.gen("x·H1")
    xi_b = U_sl3.gen("x·H2")
    one = U_sl3.one()
    left = TensorElement.from_factors(xi_a, one)
    right = TensorElement.from_factors(one, xi_b)
    ab = TensorElement.from_factors(xi_a, xi_b)
    assert left * right == ab
    assert right * left == -ab


def test_tensor_associativity(U_sl3):
    rng = random.Random(5)
    for _ in range(15):
        xs = [
            TensorElement.from_factors(
                _random_element(U_sl3, rng, 2, 1), _random_element(U_sl3, rng, 2, 1)
            )
            for _ in range(3)
        ]
        assert (xs[0] * xs[1]) * xs[2] == xs[0] * (xs[1] * xs[2])


def test_tensor_exp_group_inverse(U_sl3):
    th = TruncSeries.theta(N)
    x = TensorElement.from_factors(U_sl3.gen("H1"), U_sl3.gen("H2")).scale(th)
    assert tensor_exp(x) * tensor_exp(-x) == TensorElement.unit(U_sl3, 2)
