import logging
import random

import pytest

from chatelet_decider.chatelet.blocks import BlockStructure
from chatelet_decider.chatelet.picard import build_resolved_picard
from chatelet_decider.errors import GroupOrderCapError, LatticeError
from chatelet_decider.lattice.cohomology import (
    fixed_sublattice,
    h1_via_dual,
    quotient_invariants,
    tate_h_minus1,
)
from chatelet_decider.lattice.group import GLattice, close_group
from chatelet_decider.lattice.matrix import identity, mat_mul, mat_vec, permutation_matrix


def test_sign_representation_has_z2_cohomology():
    lattice = GLattice(close_group([[[-1]]], [False]))
    assert lattice.group.order == 2
    assert tate_h_minus1(lattice).divisors == [2]
    assert h1_via_dual(lattice).divisors == [2]
    assert fixed_sublattice(lattice) == []


def test_regular_representation_is_acyclic():
    lattice = GLattice(close_group([permutation_matrix([1, 0])], [False]))
    assert tate_h_minus1(lattice).is_trivial
    assert h1_via_dual(lattice).is_trivial
    assert len(fixed_sublattice(lattice)) == 1


def test_group_order_cap():
    with pytest.raises(GroupOrderCapError) as info:
        close_group([permutation_matrix([1, 2, 3, 4, 0])], [True], cap=3)
    assert info.value.bound == 3


def test_inconsistent_flags():
    swap = permutation_matrix([1, 0])
    with pytest.raises(LatticeError, match="inconsistent"):
        close_group([swap, swap], [True, False])


def test_quotient_requires_containment():
    with pytest.raises(LatticeError, match="B not contained in Z"):
        quotient_invariants([(2, 0)], [(1, 0)])


def test_quotient_with_free_part():
    result = quotient_invariants([(1, 0), (0, 1)], [(2, 0)])
    assert result.divisors == [2]
    assert result.free_rank == 1


def test_random_permutation_lattices_are_acyclic():
    rng = random.Random(20240601)
    for _ in range(20):
        gens = []
        for _ in range(rng.randint(1, 2)):
            images = list(range(4))
            rng.shuffle(images)
            gens.append(permutation_matrix(images))
        lattice = GLattice(close_group(gens, [True] * len(gens)))
        assert lattice.group.order <= 24
        assert tate_h_minus1(lattice).is_trivial
        assert h1_via_dual(lattice).is_trivial


@pytest.mark.parametrize("degrees, order", [((2, 2), 8), ((1,), 2), ((3,), 6)])
def test_model_group_orders(degrees, order):
    group = build_resolved_picard(BlockStructure.of(degrees)).lattice.group
    assert group.order == order
    assert sum(group.in_n) == order // 2
    for g in group.elements:
        inv = group.inverse_of(g)
        assert inv in group.elements
        assert mat_mul(g, inv) == identity(group.rank)


def test_inverse_of_foreign_matrix():
    group = close_group([permutation_matrix([1, 0])], [False])
    with pytest.raises(LatticeError, match="not an element"):
        group.inverse_of(((2, 0), (0, 1)))


@pytest.mark.parametrize("degrees", [(2, 2), (3,), (3, 1)])
def test_fixed_vectors_are_invariant(degrees):
    lattice = build_resolved_picard(BlockStructure.of(degrees)).lattice
    fixed = fixed_sublattice(lattice)
    assert fixed
    for g in lattice.group.generators:
        for v in fixed:
            assert mat_vec(g, v) == tuple(v)


def test_closure_logs_order(caplog):
    caplog.set_level(logging.DEBUG, logger="chatelet_decider")
    close_group([permutation_matrix([1, 0])], [False])
    assert "Closed group of rank 2: order 2, |N| = 1" in caplog.text
