import pytest

from chatelet_decider.chatelet.blocks import BlockStructure, h1_closed_form
from chatelet_decider.chatelet.picard import (
    build_contracted_picard,
    build_resolved_picard,
    model_group_generators,
    split_core_summand,
    validate_root_generators,
)
from chatelet_decider.errors import InputError, PreconditionError
from chatelet_decider.lattice.cohomology import fixed_sublattice, h1_via_dual, tate_h_minus1
from chatelet_decider.lattice.matrix import mat_vec
from chatelet_decider.main import _block_structures
from chatelet_decider.pipeline.decider import lattice_cohomology

BLOCK_CASES = [
    (2,),
    (3,),
    (4,),
    (2, 1),
    (2, 2),
    (3, 1),
    (3, 3),
    (4, 2),
    (5, 3),
    (1, 1, 1),
    (2, 2, 2),
    (2, 2, 1),
    (3, 2, 1),
    (6, 2),
]


def test_model_generators():
    gens = model_group_generators(BlockStructure.of((2, 2)))
    assert gens == [((1, 0, 2, 3), True), ((0, 1, 3, 2), True), ((0, 1, 2, 3), False)]


@pytest.mark.parametrize("degrees", BLOCK_CASES)
def test_lattice_cohomology_matches_closed_form(degrees):
    blocks = BlockStructure.of(degrees)
    report = lattice_cohomology(blocks)
    j = h1_closed_form(blocks)
    assert report.closed_form_j == j
    assert report.h1 == [2] * j
    assert report.h_minus1 == [2] * j


@pytest.mark.parametrize("degrees", [(2, 2), (3,), (3, 2, 1)])
def test_permutation_summand_is_acyclic(degrees):
    blocks = BlockStructure.of(degrees)
    core, perm = split_core_summand(build_resolved_picard(blocks))
    r = blocks.r
    assert core.rank + perm.rank == 2 * r + 2
    assert perm.rank == (r if r % 2 == 0 else r + 1)
    assert tate_h_minus1(perm.lattice).is_trivial
    assert h1_via_dual(perm.lattice).is_trivial


@pytest.mark.parametrize("degrees", [(4,), (2, 2), (3, 1), (6,), (4, 2), (2, 2, 2)])
def test_contracted_picard(degrees):
    blocks = BlockStructure.of(degrees)
    r = blocks.r
    model = build_contracted_picard(blocks)
    assert model.rank == r + 2
    assert len(fixed_sublattice(model.lattice)) == 2
    canonical = model.canonical
    f = [0] * (r + 1) + [1]
    assert sum(x * y for x, y in zip(canonical, mat_vec(model.gram, canonical))) == 8 - r
    assert sum(x * y for x, y in zip(canonical, mat_vec(model.gram, f))) == -2
    assert model.basis_labels[-1] == f"E{3 * r // 2}"


def test_contracted_picard_needs_even_degree():
    with pytest.raises(PreconditionError, match="evenize first"):
        build_contracted_picard(BlockStructure.of((3,)))


def test_certificate_orbits_must_match_blocks():
    blocks = BlockStructure.of((2, 2))
    with pytest.raises(InputError):
        validate_root_generators(blocks, [((1, 2, 0, 3), False)])


def test_certificate_needs_generator_outside_n():
    blocks = BlockStructure.of((2,))
    with pytest.raises(InputError):
        validate_root_generators(blocks, [((1, 0), True)])


def test_certificate_group():
    blocks = BlockStructure.of((2, 2))
    gens = [((1, 0, 2, 3), False), ((0, 1, 3, 2), False)]
    model = build_resolved_picard(blocks, gens)
    assert model.source == "certificate"
    assert model.lattice.group.order == 4
    report = lattice_cohomology(blocks, gens)
    assert report.h1 == [2]


def test_sweep_up_to_degree_eight_matches_closed_form():
    structures = _block_structures(8, 3, 6)
    assert BlockStructure.of((4, 2, 2)) in structures
    for blocks in structures:
        core, perm = split_core_summand(build_resolved_picard(blocks))
        assert tate_h_minus1(perm.lattice).is_trivial
        assert h1_via_dual(perm.lattice).is_trivial
        report = lattice_cohomology(blocks)
        assert report.h1 == [2] * h1_closed_form(blocks)
