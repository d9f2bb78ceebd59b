from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from chatelet_decider.chatelet.blocks import BlockStructure
from chatelet_decider.errors import InputError, LatticeError, PreconditionError
from chatelet_decider.lattice.group import GLattice, MatrixGroup, close_group
from chatelet_decider.lattice.matrix import (
    Matrix,
    as_matrix,
    from_columns,
    inverse,
    mat_mul,
    transpose,
)

log = logging.getLogger(__name__)

RootGenerator = tuple[tuple[int, ...], bool]


@dataclass(frozen=True)
class GaloisModel:
    lattice: GLattice
    basis_labels: tuple[str, ...]
    blocks: BlockStructure
    gram: Matrix | None = None
    canonical: tuple[int, ...] | None = None
    source: str = "model"

    @property
    def rank(self) -> int:
        return self.lattice.rank


def model_group_generators(blocks: BlockStructure) -> list[RootGenerator]:
    """Cyclic shift on every block (in N) plus tau outside N acting trivially on roots."""
    r = blocks.r
    gens: list[RootGenerator] = []
    for block in blocks.ranges():
        if len(block) < 2:
            continue
        images = list(range(r))
        for i in block:
            images[i] = block[(i - block[0] + 1) % len(block)]
        gens.append((tuple(images), True))
    gens.append((tuple(range(r)), False))
    return gens


def validate_root_generators(
    blocks: BlockStructure, generators: Sequence[RootGenerator]
) -> None:
    """Certificate permutations must act on the r roots with the blocks as orbits."""
    r = blocks.r
    parent = list(range(r))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for images, _ in generators:
        if sorted(images) != list(range(r)):
            raise InputError(f"not a permutation of {r} roots: {list(images)}")
        for i, j in enumerate(images):
            parent[find(i)] = find(j)
    orbits = sorted(sorted(i for i in range(r) if find(i) == root) for root in set(map(find, range(r))))
    expected = sorted(list(block) for block in blocks.ranges())
    if orbits != expected:
        raise InputError(f"certificate orbits {orbits} do not match blocks {expected}")
    if all(flag for _, flag in generators):
        raise InputError("certificate needs a generator outside N")


def _resolved_matrix(images: Sequence[int], in_n: bool, r: int) -> Matrix:
    # basis: E1..Er, u_inf, x_inf, E(r+1)..E(2r)
    n = 2 * r + 2
    g = [[0] * n for _ in range(n)]
    u, x = r, r + 1
    if in_n:
        for i in range(r):
            g[images[i]][i] = 1
        for k in range(r, n):
            g[k][k] = 1
        return as_matrix(g)
    for i in range(r):
        g[images[i]][i] = -1
        for k in range(x, n):
            g[k][i] = 1
    for i in range(r):
        g[i][u] = -1
    g[u][u] = 1
    for b in range(r + 1):
        g[x + b][u] = b
        g[x + (r - b)][x + b] = 1
    return as_matrix(g)


def _contracted_matrix(images: Sequence[int], in_n: bool, r: int) -> Matrix:
    # basis: E1..Er, u_inf, E(3r/2)
    n = r + 2
    g = [[0] * n for _ in range(n)]
    u, f = r, r + 1
    if in_n:
        for i in range(r):
            g[images[i]][i] = 1
        g[u][u] = g[f][f] = 1
        return as_matrix(g)
    for i in range(r):
        g[images[i]][i] = -1
        g[i][u] = -1
        g[f][i] = 1
    g[u][u] = 1
    g[f][u] = r // 2
    g[f][f] = 1
    return as_matrix(g)


def _root_generators(
    blocks: BlockStructure, root_generators: Sequence[RootGenerator] | None
) -> tuple[list[RootGenerator], str]:
    if root_generators is None:
        return model_group_generators(blocks), "model"
    validate_root_generators(blocks, root_generators)
    return list(root_generators), "certificate"


def resolved_labels(r: int) -> tuple[str, ...]:
    return (
        tuple(f"E{i}" for i in range(1, r + 1))
        + ("u_inf", "x_inf")
        + tuple(f"E{r + j}" for j in range(1, r + 1))
    )


def build_resolved_picard(
    blocks: BlockStructure,
    root_generators: Sequence[RootGenerator] | None = None,
    cap: int = 4096,
) -> GaloisModel:
    """Picard lattice (rank 2r + 2) of the surface on which the conjugation is biregular."""
    r = blocks.r
    gens, source = _root_generators(blocks, root_generators)
    group = close_group(
        [_resolved_matrix(images, flag, r) for images, flag in gens],
        [flag for _, flag in gens],
        cap=cap,
    )
    log.debug(f"Resolved Picard lattice for blocks {blocks.block_degrees}: group order {group.order}")
    return GaloisModel(
        lattice=GLattice(group),
        basis_labels=resolved_labels(r),
        blocks=blocks,
        source=source,
    )


def _core_basis(r: int) -> tuple[list[list[int]], list[str], list[list[int]], list[str]]:
    n = 2 * r + 2
    u, x = r, r + 1

    def fj(j: int) -> int:
        return x + j

    lower = range(1, (r + 1) // 2)
    core, core_labels = [], []
    for i in range(r):
        v = [0] * n
        v[i] = 1
        v[x] = -1
        for j in lower:
            v[fj(j)] = -1
        core.append(v)
        core_labels.append(f"e{i + 1}")
    v = [0] * n
    v[u] = 1
    v[x] = -r
    for j in lower:
        v[fj(j)] = -(r - j)
    core.append(v)
    core_labels.append(f"e{r + 1}")
    if r % 2 == 0:
        v = [0] * n
        v[fj(r // 2)] = 1
        core.append(v)
        core_labels.append(f"e{r + 2}")

    perm, perm_labels = [], []
    for j in range(0, r + 1):
        if r % 2 == 0 and j == r // 2:
            continue
        v = [0] * n
        v[x + j] = 1
        perm.append(v)
        perm_labels.append("x_inf" if j == 0 else f"E{r + j}")
    return core, core_labels, perm, perm_labels


def _restrict(group: MatrixGroup, q_inv: Matrix, q: Matrix, rows: range) -> MatrixGroup:
    def block(g: Matrix) -> Matrix:
        conj = mat_mul(mat_mul(q_inv, g), q)
        for i in range(len(conj)):
            for j in range(len(conj)):
                if (i in rows) != (j in rows) and conj[i][j]:
                    raise LatticeError("change of basis does not split the lattice")
        return tuple(tuple(conj[i][j] for j in rows) for i in rows)

    return MatrixGroup(
        rank=len(rows),
        generators=tuple(block(g) for g in group.generators),
        generator_flags=group.generator_flags,
        elements=tuple(block(g) for g in group.elements),
        in_n=group.in_n,
    )


def split_core_summand(model: GaloisModel) -> tuple[GaloisModel, GaloisModel]:
    """Split the resolved Picard lattice as core summand plus permutation lattice."""
    r = model.blocks.r
    if model.rank != 2 * r + 2:
        raise PreconditionError("expects the resolved Picard lattice")
    core, core_labels, perm, perm_labels = _core_basis(r)
    q = from_columns(core + perm, 2 * r + 2)
    q_inv = inverse(q)
    k = len(core)
    group = model.lattice.group
    core_group = _restrict(group, q_inv, q, range(0, k))
    perm_group = _restrict(group, q_inv, q, range(k, 2 * r + 2))
    return (
        GaloisModel(GLattice(core_group), tuple(core_labels), model.blocks, source=model.source),
        GaloisModel(GLattice(perm_group), tuple(perm_labels), model.blocks, source=model.source),
    )


def build_contracted_picard(
    blocks: BlockStructure,
    root_generators: Sequence[RootGenerator] | None = None,
    cap: int = 4096,
) -> GaloisModel:
    """Picard lattice (rank r + 2) after r/2 elementary transforms at infinity."""
    r = blocks.r
    if r % 2:
        raise PreconditionError("evenize first")
    if r < 4:
        raise PreconditionError("needs r >= 4")
    gens, source = _root_generators(blocks, root_generators)
    group = close_group(
        [_contracted_matrix(images, flag, r) for images, flag in gens],
        [flag for _, flag in gens],
        cap=cap,
    )
    n = r + 2
    u, f = r, r + 1
    gram = [[0] * n for _ in range(n)]
    for i in range(r):
        gram[i][i] = -1
    gram[u][u] = -(r // 2)
    gram[u][f] = gram[f][u] = 1
    canonical = tuple([1] * r + [-2, -(r // 2 + 2)])
    gram_m = as_matrix(gram)
    for g in group.generators:
        if mat_mul(mat_mul(transpose(g), gram_m), g) != gram_m:
            raise LatticeError("action does not preserve the intersection form")
    return GaloisModel(
        lattice=GLattice(group),
        basis_labels=tuple(f"E{i}" for i in range(1, r + 1)) + ("u_inf", f"E{3 * r // 2}"),
        blocks=blocks,
        gram=gram_m,
        canonical=canonical,
        source=source,
    )
