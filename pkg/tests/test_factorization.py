from fractions import Fraction

import pytest

from chatelet_decider.algebra.backends import KroneckerBackend
from chatelet_decider.algebra.factorization import (
    factor_rational_poly,
    squarefree_decomposition,
    squarefree_part,
)
from chatelet_decider.algebra.strategies import FactorizationStrategy
from chatelet_decider.errors import FactorizationBoundError
from conftest import poly


def test_squarefree_decomposition_multiplicities():
    p = poly(-1, 1) * poly(-1, 1) * poly(2, 1)
    assert squarefree_decomposition(p) == [(poly(2, 1), 1), (poly(-1, 1), 2)]


def test_squarefree_part_keeps_leading_coefficient():
    p = (poly(-1, 1) * poly(-1, 1) * poly(2, 1)) * 3
    assert squarefree_part(p) == (poly(-1, 1) * poly(2, 1)) * 3


@pytest.mark.parametrize("strategy", list(FactorizationStrategy))
def test_factor_x4_minus_1(strategy):
    result = factor_rational_poly(poly(-1, 0, 0, 0, 1), strategy.create_backend())
    assert result.irreducibles == [poly(-1, 1), poly(1, 1), poly(1, 0, 1)]
    assert result.unit == 1


@pytest.mark.parametrize("strategy", list(FactorizationStrategy))
def test_factor_sophie_germain(strategy):
    result = factor_rational_poly(poly(4, 0, 0, 0, 1), strategy.create_backend())
    assert result.irreducibles == [poly(2, -2, 1), poly(2, 2, 1)]


def test_eisenstein_octic_is_irreducible(backend):
    result = factor_rational_poly(poly(2, 0, 0, 0, 0, 0, 0, 0, 1), backend)
    assert result.degrees == [8]


def test_unit_is_split_off(backend):
    result = factor_rational_poly(poly(-6, 0, 3), backend)
    assert result.unit == 3
    assert result.irreducibles == [poly(-2, 0, 1)]
    assert result.expand() == poly(-6, 0, 3)


def test_kronecker_degree_bound():
    with pytest.raises(FactorizationBoundError) as info:
        factor_rational_poly(poly(-1, -1, 0, 0, 0, 1), KroneckerBackend(max_degree=4))
    assert info.value.bound == 4


def test_rational_coefficients(backend):
    p = poly(Fraction(-1, 4), 0, 1)
    result = factor_rational_poly(p, backend)
    assert result.irreducibles == [poly(Fraction(-1, 2), 1), poly(Fraction(1, 2), 1)]
