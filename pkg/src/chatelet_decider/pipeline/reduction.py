from __future__ import annotations

import logging
from fractions import Fraction

from chatelet_decider.algebra.backends import FactorizationBackend
from chatelet_decider.algebra.factorization import factor_rational_poly
from chatelet_decider.algebra.poly import RationalPoly
from chatelet_decider.algebra.quadratic import QuadraticSplit, factor_over_quadratic
from chatelet_decider.algebra.rational import format_rational, rational_sqrt, square_class
from chatelet_decider.domain.models import Criterion, ReductionStep
from chatelet_decider.errors import PreconditionError
from chatelet_decider.pipeline.problem import CanonicalProblem, Problem

log = logging.getLogger(__name__)


def _poly_data(a: Fraction, unit: Fraction, factors: list[RationalPoly]) -> dict:
    return {
        "a": format_rational(a),
        "unit": format_rational(unit),
        "factors": [f.to_strings() for f in factors],
    }


def _normalize_unit(
    a: Fraction, unit: Fraction, factors: list[RationalPoly], trace: list[ReductionStep]
) -> Fraction:
    core, root = square_class(unit)
    if core != unit:
        trace.append(
            ReductionStep(
                step="normalize-unit",
                criterion=Criterion.SQUARE_CLASS,
                before=_poly_data(a, unit, factors),
                after=_poly_data(a, Fraction(core), factors),
                detail={"divided_by_square_of": format_rational(root)},
            )
        )
    return Fraction(core)


def smallest_nonroot(poly: RationalPoly) -> int:
    c = 0
    while poly(c) == 0:
        c += 1
    return c


def _evenize(
    canonical: CanonicalProblem, trace: list[ReductionStep]
) -> CanonicalProblem:
    a, unit, factors = canonical.a, canonical.unit, list(canonical.factors)
    c = smallest_nonroot(canonical.poly)
    shifted = [f.shift(c) for f in factors]
    trace.append(
        ReductionStep(
            step="shift",
            criterion=Criterion.EVENIZATION,
            before=_poly_data(a, unit, factors),
            after=_poly_data(a, unit, shifted),
            detail={"c": c},
        )
    )
    # x^(d+1) * P(1/x): each factor reverses, the new root 0 is its own block
    tagged: list[tuple[RationalPoly, int | None]] = []
    new_unit = unit
    for i, f in enumerate(shifted):
        rev = f.reciprocal(f.degree)
        new_unit *= rev.leading
        tagged.append((rev.monic(), i))
    tagged.append((RationalPoly.x(), None))
    tagged.sort(key=lambda item: item[0].sort_key())
    reversed_factors = [f for f, _ in tagged]
    trace.append(
        ReductionStep(
            step="evenize",
            criterion=Criterion.EVENIZATION,
            before=_poly_data(a, unit, shifted),
            after=_poly_data(a, new_unit, reversed_factors),
            detail={"degree": canonical.degree + 1},
        )
    )
    new_unit = _normalize_unit(a, new_unit, reversed_factors, trace)
    return CanonicalProblem(
        a=a,
        unit=new_unit,
        factors=tuple(reversed_factors),
        odd_form=canonical,
        origins=tuple(origin for _, origin in tagged),
    )


def reduce_problem(
    problem: Problem,
    backend: FactorizationBackend | None = None,
    evenize: bool = True,
) -> tuple[CanonicalProblem, list[ReductionStep]]:
    """Bring the problem to canonical form, recording every move.

    Args:
        problem: Problem with a not a rational square.
        backend: Factorization backend for P.
        evenize: Turn an odd degree >= 3 into an even one by sending a root to
            infinity.

    Returns:
        The canonical problem and the trace of applied transformations.
    """
    if rational_sqrt(problem.a) is not None:
        raise PreconditionError(f"a = {format_rational(problem.a)} is a rational square")
    trace: list[ReductionStep] = []

    a_core, a_root = square_class(problem.a)
    a = Fraction(a_core)
    if a != problem.a:
        trace.append(
            ReductionStep(
                step="normalize-a",
                criterion=Criterion.SQUARE_CLASS,
                before={"a": format_rational(problem.a)},
                after={"a": format_rational(a)},
                detail={"y_scaled_by": format_rational(a_root)},
            )
        )

    factorization = factor_rational_poly(problem.poly, backend)
    unit = factorization.unit
    factors = [f for f, m in factorization.factors if m % 2]
    if any(m > 1 for _, m in factorization.factors):
        trace.append(
            ReductionStep(
                step="square-class",
                criterion=Criterion.SQUARE_CLASS,
                before={
                    "factors": [
                        {"factor": f.to_strings(), "multiplicity": m}
                        for f, m in factorization.factors
                    ]
                },
                after=_poly_data(a, unit, factors),
            )
        )

    kept = []
    for f in factors:
        result = factor_over_quadratic(f, a, backend, check_irreducible=False)
        if isinstance(result, QuadraticSplit):
            trace.append(
                ReductionStep(
                    step="remove-split-factor",
                    criterion=Criterion.SPLIT_FACTOR,
                    before={"factor": f.to_strings()},
                    after={"unit": format_rational(unit * result.c)},
                    detail={
                        "A": result.base.to_strings(),
                        "B": result.surd.to_strings(),
                        "c": format_rational(result.c),
                    },
                )
            )
            unit *= result.c
        else:
            kept.append(f)

    unit = _normalize_unit(a, unit, kept, trace)
    canonical = CanonicalProblem(a=a, unit=unit, factors=tuple(kept))
    if evenize and canonical.degree >= 3 and canonical.degree % 2:
        canonical = _evenize(canonical, trace)
    log.info(
        f"Reduced to a={format_rational(canonical.a)}, degree {canonical.degree} "
        f"in {len(trace)} steps"
    )
    return canonical, trace
