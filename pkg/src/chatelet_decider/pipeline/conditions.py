from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from math import prod
from typing import Sequence

from chatelet_decider.algebra.backends import FactorizationBackend
from chatelet_decider.algebra.factorization import (
    Factorization,
    factor_rational_poly,
    squarefree_decomposition,
)
from chatelet_decider.algebra.poly import RationalPoly, poly_product
from chatelet_decider.algebra.quadratic import QuadraticSplit, discriminant, factor_over_quadratic
from chatelet_decider.algebra.rational import (
    format_rational,
    ramified_primes,
    rational_sqrt,
    square_class,
)
from chatelet_decider.domain.models import ConditionReport, ConditionStatus, Status
from chatelet_decider.pipeline.problem import Problem

log = logging.getLogger(__name__)


def _square_coefficient(a: Fraction) -> ConditionStatus:
    root = rational_sqrt(a)
    if root is not None:
        return ConditionStatus(
            status=Status.FAILS, evidence=f"a = ({format_rational(root)})^2"
        )
    core, _ = square_class(a)
    return ConditionStatus(status=Status.HOLDS, evidence=f"a lies in the square class of {core}")


def _squarefree_degree(pieces: Sequence[tuple[RationalPoly, int]]) -> ConditionStatus:
    repeated = [f for f, m in pieces if m > 1]
    degree = sum(f.degree * m for f, m in pieces)
    if repeated:
        return ConditionStatus(status=Status.FAILS, evidence=f"repeated factor {repeated[0]}")
    if degree < 3:
        return ConditionStatus(status=Status.FAILS, evidence=f"degree {degree} < 3")
    return ConditionStatus(status=Status.HOLDS, evidence=f"squarefree of degree {degree}")


def _inert_factors(
    factorization: Factorization, a: Fraction, backend: FactorizationBackend | None
) -> ConditionStatus:
    reasons = []
    for f in factorization.irreducibles:
        result = factor_over_quadratic(f, a, backend, check_irreducible=False)
        if isinstance(result, QuadraticSplit):
            return ConditionStatus(
                status=Status.FAILS, evidence=f"{f} = {result.describe()}"
            )
        reasons.append(f"{f}: {result.reason}")
    return ConditionStatus(status=Status.HOLDS, evidence="; ".join(reasons) or "P is constant")


def quadratic_subfields(discriminant_classes: list[int]) -> list[int]:
    """Square classes of the quadratic subfields of Q(sqrt(d1), ..., sqrt(dk))."""
    found = set()
    for size in range(1, len(discriminant_classes) + 1):
        for subset in itertools.combinations(discriminant_classes, size):
            core, _ = square_class(Fraction(prod(subset)))
            if core != 1:
                found.add(core)
    return sorted(found)


def _splitting_field_contains(
    problem: Problem, factorization: Factorization
) -> ConditionStatus:
    a = problem.a
    core, _ = square_class(a)
    irreducibles = factorization.irreducibles
    if all(f.degree <= 2 for f in irreducibles):
        classes = []
        for f in irreducibles:
            if f.degree == 2:
                classes.append(square_class(Fraction(discriminant(f)))[0])
        subfields = quadratic_subfields(classes)
        status = Status.HOLDS if core in subfields else Status.FAILS
        return ConditionStatus(status=status, evidence=f"quadratic subfields {subfields}")

    radical = poly_product(irreducibles)
    _, ints = radical.integer_primitive()
    witness = ints[-1] * discriminant(radical)
    for p in ramified_primes(a):
        if witness % p:
            return ConditionStatus(
                status=Status.FAILS,
                evidence=f"prime {p} ramifies in Q(sqrt({core})) but not in the splitting field",
            )

    cert = problem.certificates.cond3 if problem.certificates else None
    if cert is not None:
        return ConditionStatus(
            status=Status.HOLDS if cert.holds else Status.FAILS,
            evidence=f"certificate: {cert.justification}",
        )
    return ConditionStatus(status=Status.UNKNOWN)


def check_conditions(
    problem: Problem, backend: FactorizationBackend | None = None
) -> ConditionReport:
    cond1 = _square_coefficient(problem.a)
    if cond1.status == Status.FAILS:
        # square a: RATIONAL without factoring over Q
        cond2 = _squarefree_degree(squarefree_decomposition(problem.poly))
        cond3 = ConditionStatus(status=Status.UNKNOWN)
        cond4 = ConditionStatus(status=Status.UNKNOWN)
    else:
        factorization = factor_rational_poly(problem.poly, backend)
        cond2 = _squarefree_degree(factorization.factors)
        cond3 = _splitting_field_contains(problem, factorization)
        cond4 = _inert_factors(factorization, problem.a, backend)
    report = ConditionReport(
        cond1=cond1,
        cond2=cond2,
        cond3=cond3,
        cond4=cond4,
        cond5=ConditionStatus(status=Status.HOLDS, evidence="characteristic 0"),
    )
    statuses = {name: value.status.value for name, value in report}
    log.debug(f"Conditions: {statuses}")
    return report
