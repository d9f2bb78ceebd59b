import pytest

from chatelet_decider.algebra.backends import KroneckerBackend
from chatelet_decider.algebra.poly import RationalPoly
from chatelet_decider.settings.settings import AppSettings


def poly(*coeffs) -> RationalPoly:
    return RationalPoly.of(*coeffs)


@pytest.fixture
def backend():
    return KroneckerBackend()


@pytest.fixture
def settings():
    return AppSettings(fiber_m_max=2, fiber_nu_bound=10, fiber_len_max=6, descent_m0=6)
