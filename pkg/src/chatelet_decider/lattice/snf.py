from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sympy.polys.matrices.normalforms import (
    hermite_normal_form,
    invariant_factors,
    smith_normal_decomp,
)

from chatelet_decider.errors import LatticeError
from chatelet_decider.lattice.matrix import (
    Matrix,
    Vector,
    columns,
    from_columns,
    from_domain_matrix,
    identity,
    mat_mul,
    mat_vec,
    to_domain_matrix,
    transpose,
    zeros,
)


@dataclass(frozen=True)
class SNFResult:
    """U * M * V = S with U, V unimodular and S diagonal with d1 | d2 | ..."""

    u: Matrix
    s: Matrix
    v: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.s[i][i] for i in range(min(len(self.s), len(self.s[0]) if self.s else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(m: Sequence[Sequence[int]], n_cols: int | None = None) -> SNFResult:
    rows = len(m)
    cols = len(m[0]) if m else (n_cols or 0)
    if rows == 0 or cols == 0:
        return SNFResult(u=identity(rows), s=zeros(rows, cols), v=identity(cols))
    s, u, v = smith_normal_decomp(to_domain_matrix(m))
    result = SNFResult(
        u=from_domain_matrix(u), s=from_domain_matrix(s), v=from_domain_matrix(v)
    )
    if mat_mul(mat_mul(result.u, m), result.v) != result.s:
        raise LatticeError("Smith transforms do not reproduce the diagonal form")
    return result


def elementary_divisors(m: Sequence[Sequence[int]], n_cols: int | None = None) -> list[int]:
    """Diagonal of the Smith form, without the transforms."""
    rows = len(m)
    cols = len(m[0]) if m else (n_cols or 0)
    if rows == 0 or cols == 0:
        return []
    return [abs(int(d)) for d in invariant_factors(to_domain_matrix(m))]


def row_space_basis(m: Sequence[Sequence[int]]) -> Matrix:
    """Independent rows spanning the same Z-module as the rows of m."""
    if not m:
        return ()
    hnf = hermite_normal_form(to_domain_matrix(transpose(m)))
    return transpose(from_domain_matrix(hnf))


def integer_kernel(m: Sequence[Sequence[int]], n_cols: int) -> list[Vector]:
    """Saturated Z-basis of {x : M x = 0}."""
    reduced = row_space_basis(m)
    if not reduced:
        return columns(identity(n_cols))
    snf = smith_normal_form(reduced, n_cols)
    rank = snf.rank
    return [tuple(row[j] for row in snf.v) for j in range(rank, n_cols)]


def lattice_basis(generators: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Z-basis of the span of the given vectors in Z^dim."""
    if not generators:
        return []
    hnf = hermite_normal_form(to_domain_matrix(from_columns(generators, dim)))
    return columns(from_domain_matrix(hnf))


def solve_coordinates(
    basis: Sequence[Sequence[int]], vectors: Sequence[Sequence[int]]
) -> list[Vector | None]:
    """Integer coordinates of each vector in a linearly independent basis, if any."""
    if not basis:
        return [() if not any(vector) else None for vector in vectors]
    dim = len(basis[0])
    k = len(basis)
    snf = smith_normal_form(from_columns(basis, dim))
    found: list[Vector | None] = []
    for vector in vectors:
        ub = mat_vec(snf.u, vector)
        y: list[int] | None = []
        for i in range(len(ub)):
            d = snf.s[i][i] if i < k else 0
            if d == 0:
                if ub[i] != 0:
                    y = None
                    break
                y.append(0)
            elif ub[i] % d:
                y = None
                break
            else:
                y.append(ub[i] // d)
        found.append(None if y is None else mat_vec(snf.v, y[:k]))
    return found


def coordinates(basis: Sequence[Sequence[int]], vector: Sequence[int]) -> Vector | None:
    return solve_coordinates(basis, [vector])[0]
