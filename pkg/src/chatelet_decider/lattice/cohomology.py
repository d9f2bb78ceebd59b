import logging
from typing import Sequence

from chatelet_decider.domain.models import AbelianInvariants
from chatelet_decider.errors import LatticeError
from chatelet_decider.lattice.group import GLattice
from chatelet_decider.lattice.matrix import Vector, columns, mat_mul, minus_identity, zeros
from chatelet_decider.lattice.snf import elementary_divisors, integer_kernel, solve_coordinates

log = logging.getLogger(__name__)


def fixed_sublattice(lattice: GLattice) -> list[Vector]:
    stacked = [row for g in lattice.group.elements for row in minus_identity(g)]
    return integer_kernel(stacked, lattice.rank)


def quotient_invariants(
    z_basis: Sequence[Sequence[int]], b_generators: Sequence[Sequence[int]]
) -> AbelianInvariants:
    coords = solve_coordinates(z_basis, b_generators)
    if any(y is None for y in coords):
        raise LatticeError("B not contained in Z")
    k = len(z_basis)
    if not coords:
        return AbelianInvariants(free_rank=k)
    diagonal = elementary_divisors([[y[i] for y in coords] for i in range(k)], len(coords))
    diagonal += [0] * (k - len(diagonal))
    return AbelianInvariants(
        divisors=[d for d in diagonal if d > 1],
        free_rank=sum(1 for d in diagonal if d == 0),
    )


def tate_h_minus1(lattice: GLattice) -> AbelianInvariants:
    """Kernel of the norm map modulo the span of the (g - 1)-images."""
    group = lattice.group
    norm = group.norm_matrix
    for g in group.elements:
        if mat_mul(norm, minus_identity(g)) != zeros(lattice.rank, lattice.rank):
            raise LatticeError("norm does not annihilate g - 1")
    z_basis = integer_kernel(norm, lattice.rank)
    b_generators = list(
        dict.fromkeys(
            col for g in group.elements for col in columns(minus_identity(g)) if any(col)
        )
    )
    result = quotient_invariants(z_basis, b_generators)
    if result.free_rank:
        raise LatticeError("Tate cohomology must be finite")
    log.debug(f"H^-1 of rank-{lattice.rank} lattice (group order {group.order}): {result.divisors}")
    return result


def h1_via_dual(lattice: GLattice) -> AbelianInvariants:
    return tate_h_minus1(lattice.dual())
