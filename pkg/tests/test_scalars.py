"""Scalar ring: exactness, convolution oracle, exp/invert laws.

Runs against whichever backend is active, plus a twin test asserting the
Cython and pure implementations agree operation-by-operation.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncweil.errors import ConfigurationError, DomainError
from ncweil.scalars import GR_I, GR_ONE, GaussRational, TruncSeries
from ncweil.scalars import _pure

N = 4

rationals = st.builds(
    Fraction,
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=1, max_value=12),
)


def gauss(re, im=0):
    return GaussRational.from_fractions(Fraction(re), Fraction(im))


def series(*coeffs):
    return TruncSeries([gauss(c) if not isinstance(c, tuple) else gauss(*c) for c in coeffs], N)


gauss_st = st.builds(gauss, rationals, rationals)
series_st = st.builds(lambda cs: TruncSeries(cs, N), st.lists(gauss_st, min_size=N + 1, max_size=N + 1))


def test_imaginary_unit_squares_to_minus_one():
    assert GR_I * GR_I == gauss(-1)


def test_difference_of_squares():
    th = TruncSeries.theta(N)
    one = TruncSeries.one(N)
    assert (one + th) * (one - th) == one - th * th


def test_convolution_oracle():
    # brute-force convolution, independent of TruncSeries.__mul__
    a = series(1, (1, 2), (-3, 1), (0, 5), 2)
    b = series((2, -1), 0, (1, 7), 4, (-1, -1))
    prod = a * b
    for k in range(N + 1):
        expected = sum(
            (a.coeffs[j] * b.coeffs[k - j] for j in range(k + 1)),
            gauss(0),
        )
        assert prod.coeffs[k] == expected


@given(series_st, series_st, series_st)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


def test_exp_of_zero_is_one():
    assert TruncSeries.zero(N).exp() == TruncSeries.one(N)


def test_exp_group_law_trivial():
    th = TruncSeries.theta(N)
    assert th.exp() * (-th).exp() == TruncSeries.one(N)


@given(rationals, rationals)
@settings(max_examples=40, deadline=None)
def test_exp_group_law(a, b):
    th = TruncSeries.theta(N)
    x = th.scalar_mul(gauss(a))
    y = th.scalar_mul(gauss(b))
    assert x.exp() * y.exp() == (x + y).exp()


@given(series_st, series_st)
@settings(max_examples=40, deadline=None)
def test_exp_additivity_general(a, b):
    a = a - TruncSeries.constant(a.coeffs[0], N)
    b = b - TruncSeries.constant(b.coeffs[0], N)
    assert (a + b).exp() == a.exp() * b.exp()


def test_exp_rejects_constant_term():
    with pytest.raises(DomainError):
        TruncSeries.one(N).exp()


def test_invert_one():
    assert TruncSeries.one(N).invert() == TruncSeries.one(N)


def test_invert_geometric_series():
    th = TruncSeries.theta(N)
    inv = (TruncSeries.one(N) + th).invert()
    # sum of (-theta)^k, and multiplying back gives 1
    expected = TruncSeries([gauss((-1) ** k) for k in range(N + 1)], N)
    assert inv == expected
    assert inv * (TruncSeries.one(N) + th) == TruncSeries.one(N)


def test_invert_exp():
    th = TruncSeries.theta(N)
    assert th.exp().invert() == (-th).exp()


@given(series_st)
@settings(max_examples=40, deadline=None)
def test_invert_involution(x):
    if x.coeffs[0].is_zero():
        x = x + TruncSeries.one(N)
    assert x.invert().invert() == x
    assert x * x.invert() == TruncSeries.one(N)


def test_invert_rejects_zero_constant():
    with pytest.raises(DomainError):
        TruncSeries.theta(N).invert()


def test_order_mismatch_is_configuration_error():
    with pytest.raises(ConfigurationError):
        TruncSeries.one(3) + TruncSeries.one(4)
    with pytest.raises(ConfigurationError):
        TruncSeries.one(3) * TruncSeries.one(4)


def test_gauss_rational_field_ops():
    x = gauss(Fraction(3, 4), Fraction(-2, 5))
    assert x * x.inverse() == GR_ONE
    assert x + (-x) == gauss(0)
    assert (x / x) == GR_ONE
    assert x.conjugate().conjugate() == x


def test_hash_consistent_with_eq():
    assert hash(gauss(Fraction(1, 2))) == hash(GaussRational(1, 0, 2))
    s1 = series(1, 2, 3, 4, 5)
    s2 = series(1, 2, 3, 4, 5)
    assert hash(s1) == hash(s2) and s1 == s2


# -- backend twin -------------------------------------------------------------


@given(gauss_st, gauss_st)
@settings(max_examples=60, deadline=None)
def test_backends_agree_on_gauss_ops(x, y):
    px = _pure.GaussRational(x.a, x.b, x.d)
    py = _pure.GaussRational(y.a, y.b, y.d)
    for op in ("__add__", "__sub__", "__mul__"):
        got = getattr(x, op)(y)
        ref = getattr(px, op)(py)
        assert (got.a, got.b, got.d) == (ref.a, ref.b, ref.d)
    if not y.is_zero():
        got = x / y
        ref = px / py
        assert (got.a, got.b, got.d) == (ref.a, ref.b, ref.d)


@given(series_st, series_st)
@settings(max_examples=30, deadline=None)
def test_backends_agree_on_series_ops(a, b):
    def to_pure(s):
        return _pure.TruncSeries(
            [_pure.GaussRational(c.a, c.b, c.d) for c in s.coeffs], s.order
        )

    pa, pb = to_pure(a), to_pure(b)
    got = a * b
    ref = pa * pb
    assert [(c.a, c.b, c.d) for c in got.coeffs] == [(c.a, c.b, c.d) for c in ref.coeffs]
    got = a + b
    ref = pa + pb
    assert [(c.a, c.b, c.d) for c in got.coeffs] == [(c.a, c.b, c.d) for c in ref.coeffs]
