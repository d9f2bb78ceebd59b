from fractions import Fraction

import pytest

from chatelet_decider.algebra.poly import RationalPoly
from chatelet_decider.domain.models import Criterion
from chatelet_decider.errors import PreconditionError
from chatelet_decider.pipeline.problem import Problem
from chatelet_decider.pipeline.reduction import reduce_problem, smallest_nonroot
from conftest import poly

GAUSSIAN_CASE = poly(1, 0, 1) * poly(1, -1, 0, 1)


def steps(trace):
    return [step.step for step in trace]


def test_split_factor_is_removed(backend):
    canonical, trace = reduce_problem(Problem(Fraction(-1), GAUSSIAN_CASE), backend, evenize=False)
    assert canonical.factors == (poly(1, -1, 0, 1),)
    assert canonical.poly == poly(1, -1, 0, 1)
    assert "remove-split-factor" in steps(trace)
    removal = next(step for step in trace if step.step == "remove-split-factor")
    assert removal.detail["A"] == ["0/1", "1/1"]
    assert removal.detail["B"] == ["1/1"]


def test_gaussian_case_is_evenized(backend):
    canonical, trace = reduce_problem(Problem(Fraction(-1), GAUSSIAN_CASE), backend)
    assert canonical.poly == poly(0, 1, 0, -1, 1)
    assert canonical.factors[0] == RationalPoly.x()
    assert canonical.blocks.block_degrees == (1, 3)
    assert canonical.origins == (None, 0)
    assert canonical.odd_form.degree == 3
    assert steps(trace)[-2:] == ["shift", "evenize"]


def test_cubic_is_evenized(backend):
    canonical, trace = reduce_problem(Problem(Fraction(5), poly(-2, 0, 0, 1)), backend)
    assert canonical.poly == poly(0, 1, 0, 0, -2)
    assert canonical.unit == -2
    shift = next(step for step in trace if step.step == "shift")
    assert shift.detail == {"c": 0}
    evenize = next(step for step in trace if step.step == "evenize")
    assert shift.criterion == evenize.criterion == Criterion.EVENIZATION


def test_root_action_follows_evenized_blocks(backend):
    canonical, _ = reduce_problem(Problem(Fraction(5), poly(-2, 0, 0, 1)), backend)
    assert canonical.blocks.block_degrees == (1, 3)
    assert canonical.origins == (None, 0)
    assert canonical.lift_root_action([1, 2, 0]) == (0, 2, 3, 1)
    assert canonical.lift_root_action([0, 1, 2]) == (0, 1, 2, 3)


def test_shift_avoids_root_at_zero(backend):
    canonical, trace = reduce_problem(Problem(Fraction(5), poly(0, -2, 0, 1)), backend)
    shift = next(step for step in trace if step.step == "shift")
    assert shift.detail == {"c": 1}
    assert canonical.degree == 4
    assert smallest_nonroot(poly(0, -1, 1)) == 2


def test_coset_normalization(backend):
    canonical, trace = reduce_problem(
        Problem(Fraction(20), poly(-2, 0, 0, 1) * 9), backend, evenize=False
    )
    assert canonical.a == 5
    assert canonical.unit == 1
    assert canonical.poly == poly(-2, 0, 0, 1)
    assert steps(trace) == ["normalize-a", "normalize-unit"]


def test_square_factors_are_dropped(backend):
    p = poly(0, 0, 1) * poly(-2, 0, 0, 1)
    canonical, trace = reduce_problem(Problem(Fraction(5), p), backend, evenize=False)
    assert canonical.poly == poly(-2, 0, 0, 1)
    assert steps(trace) == ["square-class"]


def test_inert_squarefree_input_is_unchanged(backend):
    p = poly(2, 0, 1) * poly(3, 0, 1)
    canonical, trace = reduce_problem(Problem(Fraction(6), p), backend)
    assert canonical.poly == p
    assert trace == []


@pytest.mark.parametrize(
    "a, p",
    [
        (Fraction(-1), GAUSSIAN_CASE),
        (Fraction(5), poly(-2, 0, 0, 1)),
        (Fraction(12), poly(0, 0, 4) * poly(3, 0, 1)),
    ],
)
def test_reduction_is_idempotent(backend, a, p):
    once, _ = reduce_problem(Problem(a, p), backend)
    twice, trace = reduce_problem(Problem(once.a, once.poly), backend)
    assert twice == once
    assert twice.blocks == once.blocks
    assert trace == []


def test_square_a_is_rejected(backend):
    with pytest.raises(PreconditionError):
        reduce_problem(Problem(Fraction(9), poly(1, 0, 1)), backend)
