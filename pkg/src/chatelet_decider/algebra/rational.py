from fractions import Fraction
from math import isqrt

import sympy

from chatelet_decider.errors import InputError


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse "num/den" or a bare integer into a reduced Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    raw = text.strip()
    try:
        if "/" in raw:
            num, den = raw.split("/", 1)
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(raw))
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"Not a rational number: {text!r}") from e
    return value


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def integer_sqrt(n: int) -> int | None:
    if n < 0:
        return None
    root = isqrt(n)
    return root if root * root == n else None


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root in Q, or None when value is not a rational square."""
    num = integer_sqrt(value.numerator)
    den = integer_sqrt(value.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def square_class(value: Fraction) -> tuple[int, Fraction]:
    """Split value = core * root**2 with core a squarefree integer.

    Args:
        value: Nonzero rational number.

    Returns:
        The squarefree integer representative of the class of value modulo
        nonzero rational squares, and the rational root with
        value = core * root**2.
    """
    if value == 0:
        raise ValueError("Zero has no square class")
    n = value.numerator * value.denominator
    sign = -1 if n < 0 else 1
    core, root = 1, 1
    for prime, exponent in sympy.factorint(abs(n)).items():
        if exponent % 2:
            core *= prime
        root *= prime ** (exponent // 2)
    core *= sign
    return core, Fraction(root, value.denominator)


def ramified_primes(a: Fraction) -> list[int]:
    """Primes ramified in Q(sqrt(a)), read off the field discriminant."""
    core, _ = square_class(a)
    primes = sorted(sympy.primefactors(abs(core)))
    if core % 4 in (2, 3) and 2 not in primes:
        primes = sorted(primes + [2])
    return primes


def to_sympy(value: Fraction | int) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value: sympy.Expr) -> Fraction:
    num, den = sympy.fraction(sympy.sympify(value))
    return Fraction(int(num), int(den))
