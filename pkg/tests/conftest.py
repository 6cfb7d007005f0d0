import pytest

from ncweil.liealg import load_preset
from ncweil.pbw import ENVELOPING, WEIL, Algebra

N = 4


@pytest.fixture(scope="session")
def sl2_tilde():
    return load_preset("sl2")


@pytest.fixture(scope="session")
def sl3_tilde():
    return load_preset("sl3")


@pytest.fixture(scope="session")
def so5_tilde():
    return load_preset("so5")


@pytest.fixture(scope="session")
def sl3_quad():
    return load_preset("sl3", variant="quadratic")


@pytest.fixture(scope="session")
def sl2_quad():
    return load_preset("sl2", variant="quadratic")


@pytest.fixture(scope="session")
def U_sl3(sl3_tilde):
    return Algebra(sl3_tilde, ENVELOPING, N)


@pytest.fixture(scope="session")
def U_sl2(sl2_tilde):
    return Algebra(sl2_tilde, ENVELOPING, N)


@pytest.fixture(scope="session")
def W_sl3(sl3_quad):
    return Algebra(sl3_quad, WEIL, N)


@pytest.fixture(scope="session")
def W_sl2(sl2_quad):
    return Algebra(sl2_quad, WEIL, N)
