import itertools
import logging
import math
from abc import ABC, abstractmethod
from fractions import Fraction

import sympy

from chatelet_decider.algebra.poly import RationalPoly
from chatelet_decider.algebra.rational import from_sympy, to_sympy
from chatelet_decider.errors import FactorizationBoundError

log = logging.getLogger(__name__)


class FactorizationBackend(ABC):

    @abstractmethod
    def factor_squarefree(self, f: RationalPoly) -> list[RationalPoly]:
        """Split a monic squarefree polynomial into monic irreducibles over Q."""
        pass


def interpolate(points: list[int], values: list[int]) -> RationalPoly:
    """Newton interpolation through (points[i], values[i])."""
    table = [Fraction(v) for v in values]
    newton = [table[0]]
    for level in range(1, len(points)):
        table = [
            (table[i + 1] - table[i]) / (points[i + level] - points[i])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])
    result = RationalPoly.constant(newton[-1])
    for i in range(len(points) - 2, -1, -1):
        result = result * RationalPoly.of(-points[i], 1) + RationalPoly.constant(newton[i])
    return result


def _signed_divisors(n: int) -> list[int]:
    positive = sympy.divisors(abs(n))
    return [s * d for d in positive for s in (1, -1)]


class KroneckerBackend(FactorizationBackend):
    def __init__(self, max_degree: int = 8, max_coeff: int = 10**6):
        self.max_degree = max_degree
        self.max_coeff = max_coeff

    def _check_bounds(self, ints: tuple[int, ...]) -> None:
        degree = len(ints) - 1
        if degree > self.max_degree:
            raise FactorizationBoundError(
                f"factorization bound exceeded: degree {degree} > {self.max_degree}",
                bound=self.max_degree,
            )
        largest = max(abs(c) for c in ints)
        if largest > self.max_coeff:
            raise FactorizationBoundError(
                f"factorization bound exceeded: coefficient {largest} > {self.max_coeff}",
                bound=self.max_coeff,
            )

    def factor_squarefree(self, f: RationalPoly) -> list[RationalPoly]:
        if f.degree <= 1:
            return [f.monic()] if f.degree == 1 else []
        _, ints = f.integer_primitive()
        self._check_bounds(ints)
        linear, rest = self._strip_rational_roots(RationalPoly(ints))
        factors = linear + self._split(rest, 2)
        return sorted((g.monic() for g in factors), key=RationalPoly.sort_key)

    def _strip_rational_roots(
        self, g: RationalPoly
    ) -> tuple[list[RationalPoly], RationalPoly]:
        found: list[RationalPoly] = []
        if g(0) == 0:
            found.append(RationalPoly.x())
            g = g.exact_div(RationalPoly.x())
        if g.degree < 1:
            return found, g
        _, ints = g.integer_primitive()
        for p in sympy.divisors(abs(ints[0])):
            for q in sympy.divisors(abs(ints[-1])):
                for root in (Fraction(p, q), Fraction(-p, q)):
                    if g.degree >= 1 and g(root) == 0:
                        linear = RationalPoly.of(-root, 1)
                        found.append(linear)
                        g = g.exact_div(linear)
        log.debug(f"Kronecker: {len(found)} rational roots stripped")
        if g.degree < 1:
            return found, RationalPoly.constant(1)
        return found, RationalPoly(g.integer_primitive()[1])

    def _evaluation_points(self, g: RationalPoly, count: int) -> list[int]:
        pool = [0]
        for k in range(1, count + 4):
            pool += [k, -k]
        ranked = sorted(
            pool, key=lambda x: (sympy.divisor_count(abs(int(g(x)))), abs(x), x)
        )
        return sorted(ranked[:count])

    def _split(self, g: RationalPoly, min_degree: int) -> list[RationalPoly]:
        if g.degree < 1:
            return []
        for d in range(min_degree, g.degree // 2 + 1):
            factor = self._find_factor(g, d)
            if factor is not None:
                _, prim = g.exact_div(factor).integer_primitive()
                return [factor] + self._split(RationalPoly(prim), d)
        return [g]

    def _find_factor(self, g: RationalPoly, d: int) -> RationalPoly | None:
        points = self._evaluation_points(g, d + 1)
        values = [int(g(x)) for x in points]
        choices = [sympy.divisors(abs(values[0]))] + [
            _signed_divisors(v) for v in values[1:]
        ]
        lead = int(g.leading)
        candidates = math.prod(len(c) for c in choices)
        log.debug(f"Kronecker: degree {d} search at points {points} ({candidates} candidates)")
        for combo in itertools.product(*choices):
            h = interpolate(points, list(combo))
            if h.degree != d:
                continue
            if any(c.denominator != 1 for c in h.coeffs):
                continue
            if lead % int(h.leading) != 0:
                continue
            if h.divides(g):
                return h
        return None


class SympyBackend(FactorizationBackend):
    def factor_squarefree(self, f: RationalPoly) -> list[RationalPoly]:
        x = sympy.Symbol("x")
        poly = sympy.Poly(
            [to_sympy(c) for c in reversed(f.coeffs)],
            x,
            domain=sympy.QQ,
        )
        _, factors = poly.factor_list()
        result = []
        for factor, _ in factors:
            coeffs = [from_sympy(c) for c in reversed(factor.all_coeffs())]
            result.append(RationalPoly(coeffs).monic())
        return sorted(result, key=RationalPoly.sort_key)
