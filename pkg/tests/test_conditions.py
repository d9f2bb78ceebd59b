from fractions import Fraction

from chatelet_decider.domain.models import Certificates, Cond3Certificate, Status
from chatelet_decider.pipeline.conditions import check_conditions, quadratic_subfields
from chatelet_decider.pipeline.problem import Problem
from conftest import poly


def test_square_a_fails_first_condition(backend):
    report = check_conditions(Problem(Fraction(4), poly(1, 0, 1)), backend)
    assert report.cond1.status == Status.FAILS
    assert report.cond1.evidence == "a = (2/1)^2"


def test_all_conditions_hold(backend):
    report = check_conditions(Problem(Fraction(6), poly(2, 0, 1) * poly(3, 0, 1)), backend)
    assert [status.status for _, status in report] == [Status.HOLDS] * 5


def test_multiquadratic_rule_fails(backend):
    p = poly(1, 0, 1) * poly(2, 0, 1) * poly(3, 0, 1)
    report = check_conditions(Problem(Fraction(5), p), backend)
    assert report.cond3.status == Status.FAILS
    assert report.cond4.status == Status.HOLDS


def test_quadratic_subfields():
    assert quadratic_subfields([-2, -3]) == [-3, -2, 6]
    assert quadratic_subfields([-1, -1]) == [-1]


def test_split_factor_fails_fourth_condition(backend):
    report = check_conditions(
        Problem(Fraction(-1), poly(1, 0, 1) * poly(1, -1, 0, 1)), backend
    )
    assert report.cond4.status == Status.FAILS
    assert report.cond4.evidence.startswith("x^2 + 1")


def test_repeated_factor_fails_second_condition(backend):
    report = check_conditions(
        Problem(Fraction(2), poly(-1, 1) * poly(-1, 1) * poly(2, 1)), backend
    )
    assert report.cond2.status == Status.FAILS


def test_ramification_proves_cond3_fails(backend):
    report = check_conditions(Problem(Fraction(5), poly(-2, 0, 0, 1)), backend)
    assert report.cond3.status == Status.FAILS
    assert "prime 5" in report.cond3.evidence


def test_cond3_unknown_without_certificate(backend):
    problem = Problem(Fraction(-3), poly(-2, 0, 0, 1))
    assert check_conditions(problem, backend).cond3.status == Status.UNKNOWN


def test_cond3_certificate(backend):
    certificates = Certificates(
        cond3=Cond3Certificate(holds=True, justification="Q(sqrt(-3)) is inside Q(2^(1/3), w)")
    )
    problem = Problem(Fraction(-3), poly(-2, 0, 0, 1), certificates)
    report = check_conditions(problem, backend)
    assert report.cond3.status == Status.HOLDS
    assert report.cond3.evidence.startswith("certificate")
    assert report.cond5.status == Status.HOLDS


def test_square_a_skips_factorization_over_q(backend):
    p = poly(1, 0, 0, 0, 0, 0, 0, 0, 0, 1)
    report = check_conditions(Problem(Fraction(9), p), backend)
    assert report.cond1.status == Status.FAILS
    assert report.cond2.status == Status.HOLDS
    assert report.cond2.evidence == "squarefree of degree 9"
    assert report.cond4.status == Status.UNKNOWN
