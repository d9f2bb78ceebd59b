from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass

from chatelet_decider.errors import LatticeError, PreconditionError

_PARTNER_MULTIPLE = {5: 1, 7: 2}


@dataclass(frozen=True)
class ConicClass:
    """d*l - sum a_i F_i on the plane blown up in n points."""

    d: int
    a: tuple[int, ...]

    def dot(self, other: ConicClass) -> int:
        return self.d * other.d - sum(x * y for x, y in zip(self.a, other.a))

    def canonical_pairing(self) -> int:
        return -3 * self.d + sum(self.a)

    def __str__(self) -> str:
        text = "l" if self.d == 1 else f"{self.d}l"
        for i, x in enumerate(self.a, start=1):
            if x:
                text += f" - F{i}" if x == 1 else f" - {x}F{i}"
        return text


def _check_points(n: int) -> None:
    if n not in _PARTNER_MULTIPLE:
        raise PreconditionError(f"n must be 5 or 7, got {n}")


def enumerate_conic_classes(n: int, d_max: int = 5, a_max: int = 2) -> list[ConicClass]:
    _check_points(n)
    found = []
    for d in range(1, d_max + 1):
        for a in itertools.product(range(a_max, -1, -1), repeat=n):
            if d * d == sum(x * x for x in a) and 3 * d - sum(a) == 2:
                found.append(ConicClass(d, tuple(a)))
    found.sort(key=lambda c: (c.d, tuple(-x for x in c.a)))
    return found


@lru_cache(maxsize=None)
def _class_set(n: int) -> frozenset[ConicClass]:
    return frozenset(enumerate_conic_classes(n))


def conic_partner(g: ConicClass, n: int) -> ConicClass:
    """The class completing g to -K (n = 5) or -2K (n = 7)."""
    _check_points(n)
    k = _PARTNER_MULTIPLE[n]
    partner = ConicClass(3 * k - g.d, tuple(k - x for x in g.a))
    if partner not in _class_set(n):
        raise LatticeError(f"pairing broken for {g}")
    return partner


def pairing_table(n: int) -> list[tuple[ConicClass, ConicClass]]:
    return [(g, conic_partner(g, n)) for g in enumerate_conic_classes(n)]
