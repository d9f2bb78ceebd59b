from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from tqdm import tqdm

from chatelet_decider.algebra.rational import format_rational, rational_sqrt
from chatelet_decider.errors import PreconditionError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    values: tuple[Fraction, ...]

    def as_strings(self) -> list[str]:
        return [format_rational(v) for v in self.values]


@dataclass(frozen=True)
class Impossible:
    reason: str


@dataclass(frozen=True)
class NoneFound:
    bound: int


NormResult = Witness | Impossible | NoneFound


def _within(value: Fraction, bound: int) -> bool:
    return abs(value.numerator) <= bound and value.denominator <= bound


def _check_preconditions(a: Fraction, bound: int) -> None:
    if bound <= 0:
        raise PreconditionError("empty search")
    if rational_sqrt(a) is not None:
        raise PreconditionError(f"a = {format_rational(a)} is a rational square")


def solve_norm_equation_bounded(
    a: Fraction, b: Fraction, bound: int, progress: bool = False
) -> NormResult:
    """Search b = s^2 - a*t^2 over s, t with numerators and denominators <= bound."""
    _check_preconditions(a, bound)
    if a < 0 and b < 0:
        return Impossible("a < 0 and b < 0: s^2 - a*t^2 is never negative")
    for w in tqdm(range(1, bound + 1), desc="Norm search", unit="den", disable=not progress):
        for v in range(bound + 1):
            t = Fraction(v, w)
            s = rational_sqrt(b + a * t * t)
            if s is not None and _within(s, bound) and _within(t, bound):
                log.debug(f"Norm witness for b={b}: s={s} t={t}")
                return Witness((s, t))
    return NoneFound(bound)


def solve_ternary_bounded(
    a: Fraction, b: Fraction, c: Fraction, bound: int, progress: bool = False
) -> NormResult:
    """Search c = s^2 - a*t^2 - b*w^2 with the same three-valued contract."""
    _check_preconditions(a, bound)
    if a < 0 and b < 0 and c < 0:
        return Impossible("a, b, c < 0: s^2 - a*t^2 - b*w^2 is never negative")
    for den in tqdm(range(1, bound + 1), desc="Ternary search", unit="den", disable=not progress):
        for i in range(bound + 1):
            t = Fraction(i, den)
            for j in range(bound + 1):
                w = Fraction(j, den)
                s = rational_sqrt(c + a * t * t + b * w * w)
                if s is not None and all(_within(v, bound) for v in (s, t, w)):
                    log.debug(f"Ternary witness for c={c}: s={s} t={t} w={w}")
                    return Witness((s, t, w))
    return NoneFound(bound)
