from collections import Counter

import pytest
from pydantic import ValidationError

from chatelet_decider.delpezzo.conics import (
    ConicClass,
    conic_partner,
    enumerate_conic_classes,
    pairing_table,
)
from chatelet_decider.delpezzo.descent import (
    DescentState,
    descent_exhaust,
    descent_step,
    nu_prime_bound,
)
from chatelet_decider.delpezzo.fibers import (
    FiberCandidate,
    fiber_equations_check,
    fiber_infeasible,
)
from chatelet_decider.errors import DepthCapError, PreconditionError


def test_fiber_equations():
    assert not fiber_equations_check(8, FiberCandidate(m=1, nu=1, multiplicities=(1, 1)))
    assert fiber_equations_check(4, FiberCandidate(m=1, nu=-1))
    assert not fiber_equations_check(5, FiberCandidate(m=1, nu=-1))


@pytest.mark.parametrize("r", [8, 9, 10])
def test_no_fiber_class_for_large_r(r):
    result = fiber_infeasible(r, m_max=6, nu_range=(-40, 40), len_max=12)
    assert result.infeasible
    assert result.symbolic_infeasible
    assert result.witness is None


def test_fiber_class_exists_for_r4():
    result = fiber_infeasible(4, m_max=3, nu_range=(-10, 10), len_max=6)
    assert not result.infeasible
    assert not result.symbolic_infeasible
    assert fiber_equations_check(4, result.witness)
    assert all(0 <= x <= 2 * result.witness.m for x in result.witness.multiplicities)
    dumped = result.model_dump(mode="json")
    assert dumped["nu_range"] == [-10, 10]
    assert dumped["witness"]["m"] == result.witness.m


def test_conic_counts():
    assert len(enumerate_conic_classes(5)) == 10
    classes = enumerate_conic_classes(7)
    assert len(classes) == 126
    histogram = Counter(c.d for c in classes)
    assert [histogram[d] for d in range(1, 6)] == [7, 35, 42, 35, 7]


@pytest.mark.parametrize("n", [5, 7])
def test_conic_classes_are_conics(n):
    for c in enumerate_conic_classes(n):
        assert c.dot(c) == 0
        assert c.canonical_pairing() == -2


@pytest.mark.parametrize("n", [5, 7])
def test_larger_bounds_add_nothing(n):
    assert enumerate_conic_classes(n, d_max=6, a_max=3) == enumerate_conic_classes(n)


def test_partner_examples():
    line = ConicClass(1, (1, 0, 0, 0, 0))
    assert conic_partner(line, 5) == ConicClass(2, (0, 1, 1, 1, 1))
    assert str(conic_partner(line, 5)) == "2l - F2 - F3 - F4 - F5"
    line7 = ConicClass(1, (1, 0, 0, 0, 0, 0, 0))
    assert conic_partner(line7, 7) == ConicClass(5, (1, 2, 2, 2, 2, 2, 2))


@pytest.mark.parametrize("n", [5, 7])
def test_partner_is_an_involution(n):
    table = pairing_table(n)
    assert len(table) == len(enumerate_conic_classes(n))
    for g, partner in table:
        assert conic_partner(partner, n) == g


def test_enumeration_rejects_other_n():
    with pytest.raises(PreconditionError):
        enumerate_conic_classes(6)


def test_nu_prime_bound():
    assert list(nu_prime_bound(4, 4)) == [-3, -2, -1]
    assert list(nu_prime_bound(6, 2)) == []
    assert list(nu_prime_bound(4, 1)) == []
    assert list(nu_prime_bound(6, 3)) == [-1]


def test_descent_steps():
    assert descent_step(DescentState(4, 3), -1) == DescentState(4, 2, (-1,))
    assert descent_step(DescentState(6, 4), -1).m == 2
    assert DescentState(4, 1).terminal
    with pytest.raises(PreconditionError):
        descent_step(DescentState(4, 3), -3)


def test_descent_branch_count():
    summary = descent_exhaust(4, 5)
    assert summary.branches == 8
    assert summary.max_depth == 4
    assert summary.min_depth == 1
    assert summary.terminal_values == [1]
    assert summary.model_dump()["branches"] == 8
    with pytest.raises(ValidationError):
        summary.branches = 0


@pytest.mark.parametrize("r", [4, 6])
def test_descent_terminates(r):
    for m0 in range(1, 51):
        summary = descent_exhaust(r, m0)
        assert summary.all_terminal
        if r == 4:
            assert summary.max_depth <= m0
        else:
            assert summary.max_depth <= m0 // 2 + 1


def test_descent_depth_cap():
    with pytest.raises(DepthCapError):
        descent_exhaust(4, 20, depth_cap=5)
