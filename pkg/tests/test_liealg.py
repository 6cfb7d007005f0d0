"""Preset catalog and structure validation."""

from fractions import Fraction

import pytest

from ncweil.errors import UnknownPresetError
from ncweil.liealg import Generator, SuperLieBasis, load_preset, validate
from ncweil.scalars import GaussRational


def test_torus_preset_is_abelian():
    b = load_preset("torus(2)")
    for i in b.cartan:
        for j in b.cartan:
            lin, const = b.bracket(i, j)
            assert not lin and not const
    assert not b.twist_trivial
    assert load_preset("torus(1)").twist_trivial


def test_sl2_flagged_twist_trivial():
    assert load_preset("sl2").twist_trivial


def test_sl3_shape():
    b = load_preset("sl3")
    assert len(b.roots) == 6
    assert validate(b).ok()
    # A2 root strings: for adjacent roots r+s is a root, r+2s is not
    r = (Fraction(1), Fraction(-1), Fraction(0))
    s = (Fraction(0), Fraction(1), Fraction(-1))
    assert b.root_index(r) is not None
    assert b.root_index(tuple(a + c for a, c in zip(r, s))) is not None
    assert b.root_index(tuple(a + 2 * c for a, c in zip(r, s))) is None


def test_so5_B_invariance_and_roots():
    b = load_preset("so5")
    rep = validate(b)
    assert rep.ok(), str(rep)
    assert len(b.roots) == 8
    # short and long roots both present
    assert b.root_index((1, 0)) is not None
    assert b.root_index((1, 1)) is not None


def test_all_presets_antisymmetric():
    for name in ("torus(3)", "sl2", "sl3", "so5", "euclid(2)"):
        b = load_preset(name)
        n = len(b.gens)
        for i in range(n):
            for j in range(n):
                lij, cij = b.bracket(i, j)
                lji, cji = b.bracket(j, i)
                s = GaussRational(-1) if b.parity(i) * b.parity(j) == 0 else GaussRational(1)
                assert cij == s * cji
                assert lij == {k: s * c for k, c in lji.items() if s * c}


def test_opposite_roots_pair_to_cartan():
    for name in ("sl2", "sl3", "so5"):
        b = load_preset(name)
        for i, r in b.roots.items():
            j = b.root_index(tuple(-x for x in r))
            assert j is not None
            lin, const = b.bracket(j, i)
            assert not const
            for hi, h in enumerate(b.cartan):
                want = r[hi]
                got = lin.get(h, GaussRational(0))
                assert got == GaussRational(want.numerator, 0, want.denominator)


def test_unknown_preset():
    with pytest.raises(UnknownPresetError):
        load_preset("g2")


def test_mutated_structure_constant_fails_jacobi():
    b = load_preset("sl3")
    i = b.root_index((Fraction(1), Fraction(-1), Fraction(0)))
    j = b.root_index((Fraction(0), Fraction(1), Fraction(-1)))
    brackets = dict(b.brackets)
    lin, const = brackets[(i, j)]
    lin = {k: c + GaussRational(1) for k, c in lin.items()}
    brackets[(i, j)] = (lin, const)
    # keep antisymmetry intact so the failure is specifically Jacobi
    sign = GaussRational(-1)
    brackets[(j, i)] = ({k: sign * c for k, c in lin.items()}, sign * const)
    mutated = SuperLieBasis(b.name, b.gens, brackets, B=b.B, variant=b.variant)
    rep = validate(mutated)
    assert not rep.ok()
    families = {f for f, _ in rep.failures()}
    assert "graded jacobi" in families


def test_mutated_B_fails_invariance():
    b = load_preset("so5")
    B = [row[:] for row in b.B]
    B[0][0] += Fraction(1, 2)
    mutated = SuperLieBasis(b.name, b.gens, b.brackets, B=B, variant=b.variant)
    rep = validate(mutated)
    assert any(f == "B ad-invariance" for f, _ in rep.failures())
