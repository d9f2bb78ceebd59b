from fractions import Fraction
from typing import Iterable, Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM, DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    columns = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in columns) for row in a
    )


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def minus_identity(g: Matrix) -> Matrix:
    return tuple(
        tuple(x - (1 if i == j else 0) for j, x in enumerate(row))
        for i, row in enumerate(g)
    )


def columns(m: Matrix) -> list[Vector]:
    return [tuple(col) for col in zip(*m)] if m else []


def from_columns(cols: Sequence[Sequence[int]], rows: int) -> Matrix:
    if not cols:
        return tuple(() for _ in range(rows))
    return transpose(cols)


def to_domain_matrix(m: Sequence[Sequence[int]]) -> DomainMatrix:
    return DM([[int(x) for x in row] for row in m], ZZ)


def from_domain_matrix(dm: DomainMatrix) -> Matrix:
    rows, cols = dm.shape
    if cols == 0:
        return tuple(() for _ in range(rows))
    return as_matrix(dm.to_list())


def determinant(m: Matrix) -> int:
    if not m:
        return 1
    return int(to_domain_matrix(m).det())


def is_unimodular(m: Matrix) -> bool:
    return abs(determinant(m)) == 1


def inverse(m: Matrix) -> Matrix:
    """Integer inverse of a unimodular matrix."""
    if not m:
        return ()
    try:
        inv = to_domain_matrix(m).to_field().inv()
    except DMNonInvertibleMatrixError as e:
        raise ArithmeticError("matrix is singular") from e
    entries = [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in inv.to_list()]
    if any(x.denominator != 1 for row in entries for x in row):
        raise ArithmeticError("matrix is not unimodular")
    return as_matrix(entries)


def permutation_matrix(images: Sequence[int]) -> Matrix:
    """Matrix sending basis vector j to basis vector images[j]."""
    n = len(images)
    return as_matrix([[1 if images[j] == i else 0 for j in range(n)] for i in range(n)])
