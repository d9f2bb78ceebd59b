from __future__ import annotations

import logging
from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field

from chatelet_decider.errors import PreconditionError
from chatelet_decider.lattice.matrix import mat_vec
from chatelet_decider.lattice.snf import coordinates, integer_kernel

log = logging.getLogger(__name__)


class PointSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    incidences: dict[str, int] = Field(
        default_factory=dict,
        description="Multiplicity of each registered curve at the point",
    )

    def multiplicity(self, curve: str) -> int:
        return self.incidences.get(curve, 0)


class SurfaceModel(BaseModel):
    """Picard lattice of a rational surface with its intersection form."""

    model_config = ConfigDict(frozen=True)

    basis_labels: list[str]
    gram: list[list[int]]
    canonical: list[int]
    curves: dict[str, list[int]] = Field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    def curve(self, curve_id: str) -> list[int]:
        try:
            return self.curves[curve_id]
        except KeyError:
            raise PreconditionError(f"unknown curve: {curve_id}") from None

    def canonical_square(self) -> int:
        return intersect(self, self.canonical, self.canonical)


def intersect(s: SurfaceModel, d1: Sequence[int], d2: Sequence[int]) -> int:
    if len(d1) != s.rank or len(d2) != s.rank:
        raise PreconditionError(
            f"dimension mismatch: {len(d1)}, {len(d2)} vs rank {s.rank}"
        )
    return sum(x * y for x, y in zip(d1, mat_vec(s.gram, d2)))


def new_quadric() -> SurfaceModel:
    return SurfaceModel(
        basis_labels=["x_inf", "u_inf"],
        gram=[[0, 1], [1, 0]],
        canonical=[-2, -2],
        curves={"x_inf": [1, 0], "u_inf": [0, 1]},
    )


def blow_up(s: SurfaceModel, p: PointSpec, label: str) -> SurfaceModel:
    if label in s.basis_labels or label in s.curves:
        raise PreconditionError(f"duplicate label: {label}")
    for curve_id, m in p.incidences.items():
        if curve_id not in s.curves:
            raise PreconditionError(f"point lies on unknown curve: {curve_id}")
        if m < 0:
            raise PreconditionError(f"negative multiplicity on {curve_id}")
    gram = [row + [0] for row in s.gram] + [[0] * s.rank + [-1]]
    curves = {cid: vec + [-p.multiplicity(cid)] for cid, vec in s.curves.items()}
    curves[label] = [0] * s.rank + [1]
    blown = SurfaceModel(
        basis_labels=s.basis_labels + [label],
        gram=gram,
        canonical=s.canonical + [1],
        curves=curves,
    )
    log.debug(f"Blow-up {label}: rank {blown.rank}, canonical square {blown.canonical_square()}")
    return blown


def _pushforward(f: list[int], keep: list[int], unit: int):
    sign = f[unit]

    def push(d: Sequence[int]) -> list[int]:
        return [d[i] - sign * d[unit] * f[i] for i in keep]

    return push


def blow_down(s: SurfaceModel, curve_id: str) -> SurfaceModel:
    f = s.curve(curve_id)
    if intersect(s, f, f) != -1 or intersect(s, f, s.canonical) != -1:
        raise PreconditionError(f"not contractible: {curve_id}")
    for other, vec in s.curves.items():
        if other != curve_id and intersect(s, vec, f) < 0:
            raise PreconditionError(f"not contractible: {other} meets {curve_id} negatively")

    units = [i for i, c in enumerate(f) if abs(c) == 1]
    if units:
        unit = units[-1]
        keep = [i for i in range(s.rank) if i != unit]
        labels = [s.basis_labels[i] for i in keep]
        push = _pushforward(f, keep, unit)
        dots = mat_vec(s.gram, f)
        gram = [[s.gram[i][j] + dots[i] * dots[j] for j in keep] for i in keep]
    else:
        functional = [list(mat_vec(s.gram, f))]
        basis = integer_kernel(functional, s.rank)
        labels = [f"D{i + 1}" for i in range(len(basis))]

        def push(d: Sequence[int]) -> list[int]:
            dot = intersect(s, d, f)
            projected = [x + dot * y for x, y in zip(d, f)]
            coords = coordinates(basis, projected)
            if coords is None:
                raise ArithmeticError("pushforward left the complement lattice")
            return list(coords)

        gram = [[intersect(s, u, v) for v in basis] for u in basis]

    curves = {cid: push(vec) for cid, vec in s.curves.items() if cid != curve_id}
    down = SurfaceModel(
        basis_labels=labels, gram=gram, canonical=push(s.canonical), curves=curves
    )
    log.debug(f"Blow-down {curve_id}: rank {down.rank}, canonical square {down.canonical_square()}")
    return down


def elementary_transform(
    s: SurfaceModel, curve_id: str, p: PointSpec, label: str
) -> SurfaceModel:
    """Blow up a point on a fiber-type curve F, then contract the strict transform of F."""
    f = s.curve(curve_id)
    if intersect(s, f, f) != 0 or intersect(s, f, s.canonical) != -2:
        raise PreconditionError(f"{curve_id} is not a fiber class (F.F = 0, F.K = -2)")
    if p.multiplicity(curve_id) < 1:
        raise PreconditionError(f"point does not lie on {curve_id}")
    return blow_down(blow_up(s, p, label), curve_id)
