from __future__ import annotations

import logging
from fractions import Fraction

from chatelet_decider.algebra.norm_equation import (
    Impossible,
    NoneFound,
    NormResult,
    Witness,
    solve_norm_equation_bounded,
    solve_ternary_bounded,
)
from chatelet_decider.algebra.poly import RationalPoly
from chatelet_decider.algebra.rational import format_rational
from chatelet_decider.domain.models import Criterion, ReasonStep, Verdict, VerdictReport
from chatelet_decider.errors import PreconditionError

log = logging.getLogger(__name__)


def _from_search(result: NormResult, step: str, data: dict) -> VerdictReport:
    match result:
        case Witness():
            verdict = Verdict.RATIONAL
            data = data | {"witness": result.as_strings()}
        case Impossible():
            verdict = Verdict.NOT_RATIONAL
            data = data | {"obstruction": result.reason}
        case NoneFound():
            verdict = Verdict.UNDECIDED
            data = data | {"search_bound": result.bound}
        case _:
            raise TypeError(f"Unexpected search result: {result!r}")
    return VerdictReport(
        verdict=verdict,
        reason_chain=[
            ReasonStep(step=step, criterion=Criterion.QUADRATIC_FORM, primary=True, data=data)
        ],
    )


def decide_low_degree(
    a: Fraction, poly: RationalPoly, norm_bound: int = 40, progress: bool = False
) -> VerdictReport:
    """Degree 0, 1 and 2 reduce to representing a number by a quadratic form."""
    if poly.degree > 2 or poly.is_zero:
        raise PreconditionError(f"expects 0 <= deg P <= 2, got {poly.degree}")
    log.info(f"Low-degree criterion for deg P = {poly.degree}")

    if poly.degree == 1:
        return VerdictReport(
            verdict=Verdict.RATIONAL,
            reason_chain=[
                ReasonStep(
                    step="linear P: solve for x",
                    criterion=Criterion.QUADRATIC_FORM,
                    primary=True,
                    data={"degree": 1},
                )
            ],
        )

    if poly.degree == 0:
        b = poly.coeff(0)
        result = solve_norm_equation_bounded(a, b, norm_bound, progress=progress)
        return _from_search(
            result, "b = s^2 - a*t^2", {"a": format_rational(a), "b": format_rational(b)}
        )

    b = poly.leading
    # complete the square: P = b*(x + e/(2b))^2 + c
    c = poly(-poly.coeff(1) / (2 * b))
    if c == 0:
        report = _from_search(
            solve_norm_equation_bounded(a, b, norm_bound, progress=progress),
            "b = s^2 - a*t^2",
            {"a": format_rational(a), "b": format_rational(b), "c": "0/1"},
        )
        report.notes.append("degree 2 with c = 0: criterion on b alone")
        return report
    result = solve_ternary_bounded(a, b, c, norm_bound, progress=progress)
    return _from_search(
        result,
        "c = s^2 - a*t^2 - b*w^2",
        {"a": format_rational(a), "b": format_rational(b), "c": format_rational(c)},
    )
