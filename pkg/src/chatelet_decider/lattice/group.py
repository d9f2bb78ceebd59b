from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from chatelet_decider.errors import GroupOrderCapError, LatticeError, PreconditionError
from chatelet_decider.lattice.matrix import (
    Matrix,
    as_matrix,
    identity,
    is_unimodular,
    mat_add,
    mat_mul,
    transpose,
    zeros,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatrixGroup:
    rank: int
    generators: tuple[Matrix, ...]
    generator_flags: tuple[bool, ...]
    elements: tuple[Matrix, ...]
    in_n: tuple[bool, ...]
    _index: dict[Matrix, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        self._index.update({g: i for i, g in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def norm_matrix(self) -> Matrix:
        total = zeros(self.rank, self.rank)
        for g in self.elements:
            total = mat_add(total, g)
        return total

    def inverse_of(self, g: Matrix) -> Matrix:
        """g^(k-1) for the order k of g."""
        if g not in self._index:
            raise LatticeError("not an element of the group")
        unit = identity(self.rank)
        h = g
        for _ in range(self.order):
            following = mat_mul(h, g)
            if following == unit:
                return h
            h = following
        raise LatticeError("element has no inverse in the group")


@dataclass(frozen=True)
class GLattice:
    group: MatrixGroup

    @property
    def rank(self) -> int:
        return self.group.rank

    def dual(self) -> GLattice:
        """Dual lattice: g acts by the transpose of its inverse."""
        gens = tuple(transpose(self.group.inverse_of(g)) for g in self.group.generators)
        # inversion permutes the group and preserves N
        elements = tuple(transpose(g) for g in self.group.elements)
        group = MatrixGroup(
            rank=self.rank,
            generators=gens,
            generator_flags=self.group.generator_flags,
            elements=elements,
            in_n=self.group.in_n,
        )
        return GLattice(group)

    def to_scenario(self) -> dict:
        return {
            "rank": self.rank,
            "generators": [[list(row) for row in g] for g in self.group.generators],
            "in_n": list(self.group.generator_flags),
        }


def close_group(
    generators: Sequence[Sequence[Sequence[int]]],
    n_flags: Sequence[bool],
    cap: int = 4096,
) -> MatrixGroup:
    """Breadth-first closure; N-membership is the parity of non-N generators used."""
    gens = tuple(as_matrix(g) for g in generators)
    if len(gens) != len(n_flags):
        raise PreconditionError("one N-flag per generator required")
    if not gens:
        raise PreconditionError("at least one generator required")
    rank = len(gens[0])
    for g in gens:
        if len(g) != rank or any(len(row) != rank for row in g):
            raise PreconditionError("generators must be square of equal size")
        if not is_unimodular(g):
            raise PreconditionError(f"generator is not unimodular: {g}")

    unit = identity(rank)
    elements = [unit]
    flags = [True]
    seen = {unit: True}
    queue = deque([(unit, True)])
    while queue:
        element, flag = queue.popleft()
        for g, g_flag in zip(gens, n_flags):
            product = mat_mul(g, element)
            product_flag = flag == g_flag
            known = seen.get(product)
            if known is None:
                if len(elements) >= cap:
                    raise GroupOrderCapError(
                        f"group order cap exceeded: {cap}", bound=cap
                    )
                seen[product] = product_flag
                elements.append(product)
                flags.append(product_flag)
                queue.append((product, product_flag))
            elif known != product_flag:
                raise LatticeError("inconsistent N-flags: N is not of index 2")
    log.debug(f"Closed group of rank {rank}: order {len(elements)}, |N| = {sum(flags)}")
    return MatrixGroup(
        rank=rank,
        generators=gens,
        generator_flags=tuple(bool(f) for f in n_flags),
        elements=tuple(elements),
        in_n=tuple(flags),
    )
