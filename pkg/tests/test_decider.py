import json
from fractions import Fraction

import pytest

from chatelet_decider.algebra.poly import RationalPoly
from chatelet_decider.domain.models import (
    Certificates,
    Criterion,
    GroupCertificate,
    Verdict,
)
from chatelet_decider.pipeline.decider import decide
from chatelet_decider.pipeline.problem import Problem
from chatelet_decider.settings.settings import AppSettings
from conftest import poly

GOLDEN = [
    (Fraction(9), poly(1, 0, 1), Verdict.RATIONAL, Criterion.SQUARE_COEFFICIENT),
    (Fraction(-1), poly(2), Verdict.RATIONAL, Criterion.QUADRATIC_FORM),
    (Fraction(-1), poly(-1), Verdict.NOT_RATIONAL, Criterion.QUADRATIC_FORM),
    (Fraction(6), poly(2, 0, 1) * poly(3, 0, 1), Verdict.NOT_RATIONAL, Criterion.COHOMOLOGY),
    (
        Fraction(5),
        poly(2, 0, 0, 0, 0, 0, 0, 0, 1),
        Verdict.NOT_RATIONAL,
        Criterion.FIBER_INFEASIBILITY,
    ),
    (
        Fraction(-1),
        poly(1, 0, 1) * poly(1, -1, 0, 1),
        Verdict.NOT_RATIONAL,
        Criterion.DEL_PEZZO_DESCENT,
    ),
]


def primary_steps(report):
    return [step for step in report.reason_chain if step.primary]


@pytest.mark.parametrize("a, p, verdict, criterion", GOLDEN)
def test_golden_verdicts(settings, a, p, verdict, criterion):
    report = decide(Problem(a, p), settings)
    assert report.verdict == verdict
    (primary,) = primary_steps(report)
    assert primary.criterion == criterion


def test_invariants_of_two_inert_quadratics(settings):
    report = decide(Problem(Fraction(6), poly(2, 0, 1) * poly(3, 0, 1)), settings)
    assert report.invariants.h1 == [2]
    assert report.invariants.h_minus1 == [2]
    assert report.invariants.closed_form_j == 1
    assert report.invariants.group_source == "model"


def test_sum_of_two_squares_witness(settings):
    report = decide(Problem(Fraction(-1), poly(2)), settings)
    (primary,) = primary_steps(report)
    assert primary.data["witness"] == ["1/1", "1/1"]


def test_gaussian_case_drops_split_factor(settings):
    report = decide(Problem(Fraction(-1), poly(1, 0, 1) * poly(1, -1, 0, 1)), settings)
    assert report.reduction_trace[0].step == "remove-split-factor"
    assert report.canonical.blocks == [1, 3]
    (primary,) = primary_steps(report)
    assert primary.data["conic_classes"] == 10
    assert primary.data["fixed_rank"] == 2
    assert primary.data["descent"]["all_terminal"]


def test_octic_uses_fiber_search(settings):
    report = decide(Problem(Fraction(5), poly(2, 0, 0, 0, 0, 0, 0, 0, 1)), settings)
    (primary,) = primary_steps(report)
    assert primary.data["omega"] == 0
    assert primary.data["search"]["infeasible"]
    assert report.invariants.closed_form_j == 0


def test_degree_two_uses_ternary_form(settings):
    report = decide(Problem(Fraction(2), poly(5, 0, 3)), settings)
    assert report.verdict == Verdict.RATIONAL
    (primary,) = primary_steps(report)
    assert primary.step == "c = s^2 - a*t^2 - b*w^2"


def test_undecided_when_search_is_exhausted():
    settings = AppSettings(norm_bound=5)
    report = decide(Problem(Fraction(-1), poly(3)), settings)
    assert report.verdict == Verdict.UNDECIDED


def test_undecided_when_factorization_bound_hit():
    settings = AppSettings(kronecker_max_degree=4)
    report = decide(Problem(Fraction(5), poly(2, 0, 0, 0, 0, 0, 0, 0, 1)), settings)
    assert report.verdict == Verdict.UNDECIDED
    assert report.notes[0].startswith("FactorizationBoundError")


def test_square_a_is_rational_beyond_factorization_bound(settings):
    report = decide(Problem(Fraction(9), poly(1, 0, 0, 0, 0, 0, 0, 0, 0, 1)), settings)
    assert report.verdict == Verdict.RATIONAL
    (primary,) = primary_steps(report)
    assert primary.criterion == Criterion.SQUARE_COEFFICIENT


def test_certificate_group(settings):
    certificates = Certificates(
        galois_group=GroupCertificate(
            degree=4, generators=[[1, 0, 2, 3], [0, 1, 3, 2]], in_n=[False, False]
        )
    )
    problem = Problem(Fraction(6), poly(2, 0, 1) * poly(3, 0, 1), certificates)
    report = decide(problem, settings)
    assert report.verdict == Verdict.NOT_RATIONAL
    assert report.invariants.group_source == "certificate"
    assert report.invariants.group_order == 4
    assert report.invariants.h1 == [2]


def test_certificate_on_evenized_cubic(settings):
    certificates = Certificates(
        galois_group=GroupCertificate(degree=3, generators=[[1, 2, 0], [0, 2, 1]], in_n=[True, False])
    )
    p = poly(1, 0, 1) * poly(1, -1, 0, 1)
    report = decide(Problem(Fraction(-1), p, certificates), settings)
    assert report.canonical.blocks == [1, 3]
    assert report.invariants.group_source == "certificate"
    assert report.invariants.group_order == 6
    assert report.verdict == decide(Problem(Fraction(-1), p), settings).verdict


def test_reports_are_byte_stable(settings):
    problem = Problem(Fraction(6), poly(2, 0, 1) * poly(3, 0, 1))
    first = json.dumps(decide(problem, settings).model_dump(mode="json"))
    second = json.dumps(decide(problem, settings).model_dump(mode="json"))
    assert first == second


def _variants(a: Fraction, p: RationalPoly):
    yield 4 * a, p
    yield a, p * 9
    yield a, p.shift(1)


@pytest.mark.parametrize("a, p, verdict, criterion", GOLDEN)
def test_verdict_is_invariant(settings, a, p, verdict, criterion):
    for a2, p2 in _variants(a, p):
        assert decide(Problem(a2, p2), settings).verdict == verdict
