from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from chatelet_decider.algebra.backends import FactorizationBackend, KroneckerBackend
from chatelet_decider.algebra.poly import RationalPoly, poly_gcd, poly_product
from chatelet_decider.errors import PreconditionError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Factorization:
    unit: Fraction
    factors: tuple[tuple[RationalPoly, int], ...]

    def expand(self) -> RationalPoly:
        return poly_product(f**m for f, m in self.factors) * self.unit

    @property
    def irreducibles(self) -> list[RationalPoly]:
        return [f for f, _ in self.factors]

    @property
    def degrees(self) -> list[int]:
        return [f.degree for f, _ in self.factors]


def squarefree_part(p: RationalPoly) -> RationalPoly:
    """P / gcd(P, P'), keeping the leading coefficient of P."""
    if p.is_zero:
        raise PreconditionError("zero input")
    g = poly_gcd(p, p.derivative())
    return (p // g).monic() * p.leading


def squarefree_decomposition(p: RationalPoly) -> list[tuple[RationalPoly, int]]:
    """Yun's algorithm: monic squarefree pieces with their multiplicities."""
    if p.is_zero:
        raise PreconditionError("zero input")
    f = p.monic()
    if f.degree < 1:
        return []
    pieces: list[tuple[RationalPoly, int]] = []
    a = poly_gcd(f, f.derivative())
    b = f // a
    c = f.derivative() // a
    d = c - b.derivative()
    multiplicity = 1
    while b.degree >= 1:
        a = poly_gcd(b, d)
        if a.degree >= 1:
            pieces.append((a, multiplicity))
        b = b // a
        c = d // a
        d = c - b.derivative()
        multiplicity += 1
    return pieces


def factor_rational_poly(
    p: RationalPoly, backend: FactorizationBackend | None = None
) -> Factorization:
    backend = backend or KroneckerBackend()
    if p.is_zero:
        raise PreconditionError("zero input")
    factors: list[tuple[RationalPoly, int]] = []
    for piece, multiplicity in squarefree_decomposition(p):
        for irreducible in backend.factor_squarefree(piece):
            factors.append((irreducible, multiplicity))
    factors.sort(key=lambda item: item[0].sort_key())
    result = Factorization(unit=p.leading, factors=tuple(factors))
    if result.expand() != p:
        raise ArithmeticError(f"factorization of {p} does not reconstruct the input")
    log.debug(f"Factored {p} into {len(factors)} irreducibles")
    return result
