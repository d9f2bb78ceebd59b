from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from pydantic import BaseModel

from chatelet_decider.domain.models import AbelianInvariants
from chatelet_decider.errors import PreconditionError
from chatelet_decider.lattice.cohomology import quotient_invariants
from chatelet_decider.lattice.matrix import Vector, columns, identity
from chatelet_decider.lattice.snf import lattice_basis


@dataclass(frozen=True)
class BlockStructure:
    """Degrees of the irreducible factors of P, i.e. the orbits on its roots."""

    block_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.block_degrees or any(d < 1 for d in self.block_degrees):
            raise PreconditionError(f"invalid block degrees: {self.block_degrees}")

    @classmethod
    def of(cls, degrees: Iterable[int]) -> BlockStructure:
        return cls(tuple(degrees))

    @property
    def r(self) -> int:
        return sum(self.block_degrees)

    @property
    def r_prime(self) -> int:
        return len(self.block_degrees)

    @property
    def all_even(self) -> bool:
        return all(d % 2 == 0 for d in self.block_degrees)

    def ranges(self) -> list[range]:
        out, start = [], 0
        for d in self.block_degrees:
            out.append(range(start, start + d))
            start += d
        return out


class SublatticeQuotients(BaseModel):
    m0_mod_mb: AbelianInvariants
    me_mod_mb: AbelianInvariants
    m0_mod_me: AbelianInvariants


def h1_closed_form(blocks: BlockStructure, degree_is_odd: bool | None = None) -> int:
    """Number of Z/2 summands of H^1 predicted by the block structure."""
    if degree_is_odd is None:
        degree_is_odd = blocks.r % 2 == 1
    if degree_is_odd or blocks.all_even:
        return blocks.r_prime - 1
    return blocks.r_prime - 2


def _unit(r: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(r))


def _block_even_generators(blocks: BlockStructure) -> list[Vector]:
    r = blocks.r
    gens: list[Vector] = []
    for block in blocks.ranges():
        first = block[0]
        for i in block[1:]:
            gens.append(tuple(a - b for a, b in zip(_unit(r, i), _unit(r, first))))
        gens.append(tuple(2 * x for x in _unit(r, first)))
    return gens


def block_sublattice_quotients(blocks: BlockStructure) -> SublatticeQuotients:
    r = blocks.r
    m0 = columns(identity(r))
    mb_gens = _block_even_generators(blocks)
    leader = blocks.ranges()[0][0]
    me_gens = mb_gens + [
        tuple(a + b for a, b in zip(_unit(r, leader), _unit(r, block[0])))
        for block in blocks.ranges()[1:]
    ]
    me = lattice_basis(me_gens, r)
    return SublatticeQuotients(
        m0_mod_mb=quotient_invariants(m0, mb_gens),
        me_mod_mb=quotient_invariants(me, mb_gens),
        m0_mod_me=quotient_invariants(m0, me),
    )
