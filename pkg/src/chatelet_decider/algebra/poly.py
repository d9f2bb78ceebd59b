from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from chatelet_decider.algebra.rational import format_rational, parse_rational
from chatelet_decider.errors import PreconditionError


def _trim(coeffs: Iterable[Fraction | int]) -> tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True, slots=True)
class RationalPoly:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def of(cls, *coeffs: Fraction | int) -> RationalPoly:
        return cls(coeffs)

    @classmethod
    def constant(cls, value: Fraction | int) -> RationalPoly:
        return cls((value,))

    @classmethod
    def x(cls) -> RationalPoly:
        return cls((0, 1))

    @classmethod
    def parse(cls, text: str) -> RationalPoly:
        """Parse a comma-separated coefficient list, lowest degree first."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        return cls(parse_rational(p) for p in parts)

    @classmethod
    def from_strings(cls, values: Sequence[str | int]) -> RationalPoly:
        return cls(parse_rational(v) for v in values)

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: RationalPoly) -> RationalPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> RationalPoly:
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other: RationalPoly) -> RationalPoly:
        return self + (-other)

    def __mul__(self, other: RationalPoly | Fraction | int) -> RationalPoly:
        if not isinstance(other, RationalPoly):
            return self.scale(Fraction(other))
        if self.is_zero or other.is_zero:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RationalPoly:
        result = RationalPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: Fraction) -> RationalPoly:
        return RationalPoly(c * factor for c in self.coeffs)

    def __divmod__(self, other: RationalPoly) -> tuple[RationalPoly, RationalPoly]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - other.degree, 1)
        lead = other.leading
        for shift in range(len(remainder) - len(other.coeffs), -1, -1):
            factor = remainder[shift + other.degree] / lead
            if factor == 0:
                continue
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                remainder[shift + i] -= factor * c
        return RationalPoly(quotient), RationalPoly(remainder)

    def __floordiv__(self, other: RationalPoly) -> RationalPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: RationalPoly) -> RationalPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: RationalPoly) -> RationalPoly:
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quotient

    def divides(self, other: RationalPoly) -> bool:
        return (other % self).is_zero

    def derivative(self) -> RationalPoly:
        return RationalPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> RationalPoly:
        if self.is_zero:
            raise PreconditionError("zero input")
        return self.scale(1 / self.leading)

    def __call__(self, value: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, c: Fraction | int) -> RationalPoly:
        """Return P(x + c)."""
        result = RationalPoly()
        step = RationalPoly.of(c, 1)
        for coeff in reversed(self.coeffs):
            result = result * step + RationalPoly.constant(coeff)
        return result

    def reciprocal(self, degree: int) -> RationalPoly:
        """Return x**degree * P(1/x); requires degree >= deg P."""
        if degree < self.degree:
            raise PreconditionError(f"reciprocal degree {degree} below {self.degree}")
        padded = list(self.coeffs) + [Fraction(0)] * (degree + 1 - len(self.coeffs))
        return RationalPoly(reversed(padded))

    def integer_primitive(self) -> tuple[Fraction, tuple[int, ...]]:
        """Split P = content * Q with Q integral, primitive, positive leading term."""
        if self.is_zero:
            raise PreconditionError("zero input")
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), tuple(i // g for i in ints)

    def sort_key(self) -> tuple:
        return (self.degree, self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_gcd(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    """Monic gcd over Q (zero when both inputs vanish)."""
    while not q.is_zero:
        p, q = q, p % q
    return p if p.is_zero else p.monic()


def poly_product(polys: Iterable[RationalPoly]) -> RationalPoly:
    return reduce(lambda acc, f: acc * f, polys, RationalPoly.constant(1))
