from fractions import Fraction

import pytest

from chatelet_decider.algebra.poly import RationalPoly, poly_gcd
from chatelet_decider.errors import InputError, PreconditionError
from conftest import poly


def test_parse_trims_trailing_zeros():
    p = RationalPoly.parse("1, 2, 0, 0")
    assert p.coeffs == (1, 2)
    assert p.degree == 1


def test_parse_fractions():
    assert RationalPoly.parse("1/2,3").coeffs == (Fraction(1, 2), 3)


def test_parse_rejects_garbage():
    with pytest.raises(InputError):
        RationalPoly.parse("1,x")


def test_zero_polynomial():
    zero = RationalPoly()
    assert zero.is_zero
    assert zero.degree == -1
    with pytest.raises(PreconditionError):
        zero.monic()


def test_divmod_exact():
    q, r = divmod(poly(-1, 0, 1), poly(-1, 1))
    assert q == poly(1, 1)
    assert r.is_zero


def test_shift_and_evaluate():
    p = poly(0, 0, 1).shift(1)
    assert p == poly(1, 2, 1)
    assert p(Fraction(-1)) == 0


def test_reciprocal_of_cubic():
    assert poly(-2, 0, 0, 1).reciprocal(4) == poly(0, 1, 0, 0, -2)


def test_integer_primitive():
    content, ints = poly(Fraction(1, 2), 1).integer_primitive()
    assert content == Fraction(1, 2)
    assert ints == (1, 2)


def test_gcd_is_monic():
    assert poly_gcd(poly(-1, 0, 1), poly(1, -2, 1)) == poly(-1, 1)


def test_to_strings():
    assert poly(Fraction(-1, 3), 2).to_strings() == ["-1/3", "2/1"]
