from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import sympy

from chatelet_decider.algebra.backends import FactorizationBackend
from chatelet_decider.algebra.factorization import factor_rational_poly
from chatelet_decider.algebra.poly import RationalPoly
from chatelet_decider.algebra.rational import (
    format_rational,
    from_sympy,
    ramified_primes,
    rational_sqrt,
    to_sympy,
)
from chatelet_decider.errors import PreconditionError

log = logging.getLogger(__name__)

_SPLIT_PRIME_TRIALS = 40


@dataclass(frozen=True)
class QuadExtPoly:
    """A(x) + sqrt(a) * B(x) over Q(sqrt(a))."""

    base: RationalPoly
    surd: RationalPoly
    a: Fraction

    def norm(self) -> RationalPoly:
        return self.base * self.base - (self.surd * self.surd).scale(self.a)


@dataclass(frozen=True)
class QuadraticSplit:
    c: Fraction
    base: RationalPoly
    surd: RationalPoly
    a: Fraction

    @property
    def factor(self) -> QuadExtPoly:
        return QuadExtPoly(self.base, self.surd, self.a)

    def expand(self) -> RationalPoly:
        return self.factor.norm().scale(self.c)

    def describe(self) -> str:
        return (
            f"{format_rational(self.c)} * (({self.base})^2 - "
            f"{format_rational(self.a)} * ({self.surd})^2)"
        )


@dataclass(frozen=True)
class Irreducible:
    reason: str


def discriminant(f: RationalPoly) -> int:
    """Discriminant of the primitive integral multiple of f."""
    _, ints = f.integer_primitive()
    x = sympy.Symbol("x")
    return int(sympy.discriminant(sympy.Poly(list(reversed(ints)), x)))


def _ramification_obstruction(f: RationalPoly, a: Fraction) -> int | None:
    _, ints = f.integer_primitive()
    witness = ints[-1] * discriminant(f)
    for p in ramified_primes(a):
        if witness % p:
            return p
    return None


def _subset_sums(values: list[int]) -> set[int]:
    sums = {0}
    for v in values:
        sums |= {s + v for s in sums}
    return sums


def _modular_obstruction(f: RationalPoly, a: Fraction) -> tuple[int, list[int]] | None:
    """Find a prime split in Q(sqrt(a)) where f mod p has no half-degree factor."""
    _, ints = f.integer_primitive()
    half = f.degree // 2
    bad = 2 * ints[-1] * discriminant(f) * a.numerator * a.denominator
    x = sympy.Symbol("x")
    p = 2
    for _ in range(_SPLIT_PRIME_TRIALS):
        p = sympy.nextprime(p)
        if bad % p == 0:
            continue
        a_mod = a.numerator * pow(a.denominator, -1, p) % p
        if sympy.legendre_symbol(a_mod, p) != 1:
            continue
        reduced = sympy.Poly(list(reversed(ints)), x, modulus=p)
        _, factors = reduced.factor_list()
        degrees = sorted(g.degree() for g, mult in factors for _ in range(mult))
        if half not in _subset_sums(degrees):
            return p, degrees
    return None


def _rational_roots(poly: sympy.Poly) -> list[Fraction]:
    _, factors = poly.factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() == 1:
            lead, const = factor.all_coeffs()
            roots.append(from_sympy(-const / lead))
    return sorted(roots)


def _rational_points(
    polys: list[sympy.Expr], symbols: tuple[sympy.Symbol, ...]
) -> list[dict[sympy.Symbol, sympy.Rational]]:
    """Rational points of a zero-dimensional lex Groebner basis, last variable first."""
    solutions: list[dict[sympy.Symbol, sympy.Rational]] = [{}]
    for var in reversed(symbols):
        extended = []
        for partial in solutions:
            constraint: sympy.Poly | None = None
            for p in polys:
                expr = sympy.expand(p.subs(partial)) if partial else p
                if expr == 0:
                    continue
                if not expr.free_symbols:
                    constraint = sympy.Poly(1, var)
                    break
                if expr.free_symbols == {var}:
                    univariate = sympy.Poly(expr, var, domain=sympy.QQ)
                    constraint = (
                        univariate
                        if constraint is None
                        else sympy.gcd(constraint, univariate)
                    )
            if constraint is None:
                raise ArithmeticError(f"elimination left {var} unconstrained")
            for root in _rational_roots(constraint):
                extended.append({**partial, var: to_sympy(root)})
        solutions = extended
    return solutions


def _solve_half_degree(
    g: RationalPoly, a: Fraction
) -> tuple[RationalPoly, RationalPoly] | None:
    """Solve g = A^2 - a*B^2 with A monic of degree n/2 and deg B < n/2."""
    m = g.degree // 2
    if m == 1:
        p = g.coeff(1) / 2
        q = rational_sqrt((p * p - g.coeff(0)) / a)
        if q is None:
            return None
        return RationalPoly.of(p, 1), RationalPoly.constant(q)

    qs = sympy.symbols(f"q0:{m}")
    sa = to_sympy(a)
    target = [to_sympy(g.coeff(k)) for k in range(2 * m + 1)]
    for i in range(m):
        for j in range(m):
            target[i + j] += sa * qs[i] * qs[j]
    base: list[sympy.Expr] = [sympy.Integer(0)] * (m + 1)
    base[m] = sympy.Integer(1)
    for t in range(m - 1, -1, -1):
        cross = sum((base[i] * base[m + t - i] for i in range(t + 1, m)), sympy.Integer(0))
        base[t] = sympy.expand((target[m + t] - cross) / 2)
    equations = [
        sympy.expand(sum(base[i] * base[k - i] for i in range(k + 1)) - target[k])
        for k in range(m)
    ]
    basis = sympy.groebner(equations, *qs, order="lex", domain=sympy.QQ)
    log.debug(f"Half-degree system for {g}: {len(basis.exprs)} basis polynomials")
    if list(basis.exprs) == [1]:
        return None

    candidates = []
    for point in _rational_points(list(basis.exprs), qs):
        surd = RationalPoly(from_sympy(point[q]) for q in qs)
        monic = RationalPoly(from_sympy(sympy.expand(c.subs(point))) for c in base)
        if monic * monic - (surd * surd).scale(a) == g:
            candidates.append((monic, surd))
    if not candidates:
        return None
    candidates.sort(key=lambda pair: (pair[1].leading < 0, pair[1].coeffs, pair[0].coeffs))
    return candidates[0]


def factor_over_quadratic(
    f: RationalPoly,
    a: Fraction,
    backend: FactorizationBackend | None = None,
    check_irreducible: bool = True,
) -> QuadraticSplit | Irreducible:
    """Decide whether an irreducible f splits over Q(sqrt(a)).

    Args:
        f: Polynomial irreducible over Q.
        a: Rational number that is not a square.
        backend: Factorization backend used for the irreducibility check.
        check_irreducible: Skip the check when the caller already factored f.

    Returns:
        QuadraticSplit with f = c * (A^2 - a*B^2), or Irreducible with the
        reason the split is impossible.

    Raises:
        PreconditionError: If f is reducible over Q or a is a square.
    """
    if f.degree < 1:
        raise PreconditionError("precondition: irreducible input")
    if rational_sqrt(a) is not None:
        raise PreconditionError(f"a = {format_rational(a)} is a rational square")
    if check_irreducible:
        factorization = factor_rational_poly(f, backend)
        if len(factorization.factors) != 1 or factorization.factors[0][1] != 1:
            raise PreconditionError("precondition: irreducible input")

    if f.degree % 2:
        return Irreducible("odd degree")
    prime = _ramification_obstruction(f, a)
    if prime is not None:
        return Irreducible(
            f"prime {prime} ramifies in Q(sqrt({format_rational(a)})) "
            f"but does not divide lc*disc"
        )
    pattern = _modular_obstruction(f, a)
    if pattern is not None:
        p, degrees = pattern
        return Irreducible(f"factor degrees {degrees} mod split prime {p}")

    solution = _solve_half_degree(f.monic(), a)
    if solution is None:
        return Irreducible("undetermined-coefficient system has no rational solution")
    base, surd = solution
    split = QuadraticSplit(c=f.leading, base=base, surd=surd, a=a)
    if split.expand() != f:
        raise ArithmeticError(f"split of {f} does not reconstruct the input")
    log.debug(f"Split {f} over Q(sqrt({format_rational(a)})): {split.describe()}")
    return split
