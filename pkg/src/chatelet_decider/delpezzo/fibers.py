from __future__ import annotations

import logging
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict
from tqdm import tqdm

from chatelet_decider.errors import PreconditionError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiberCandidate:
    m: int
    nu: int
    multiplicities: tuple[int, ...] = ()


class FiberSearchResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    r: int
    infeasible: bool
    symbolic_infeasible: bool
    witness: FiberCandidate | None
    m_max: int
    nu_range: tuple[int, int]
    len_max: int
    states: int


def _omega(r: int) -> int:
    if r < 3:
        raise PreconditionError("r must be at least 3")
    return 8 - r


def fiber_equations_check(r: int, cand: FiberCandidate) -> bool:
    omega = _omega(r)
    s1 = sum(cand.multiplicities)
    s2 = sum(x * x for x in cand.multiplicities)
    return (
        s2 == 4 * cand.m * cand.nu + omega * cand.m**2
        and s1 == 2 * cand.nu + cand.m * omega - 2
    )


def _witness_nu(omega: int, m: int, s1: int, s2: int, nu_range: tuple[int, int]) -> int | None:
    twice_nu = s1 - m * omega + 2
    if twice_nu % 2:
        return None
    nu = twice_nu // 2
    if not nu_range[0] <= nu <= nu_range[1]:
        return None
    return nu if s2 == 4 * m * nu + omega * m * m else None


def fiber_infeasible(
    r: int,
    m_max: int,
    nu_range: tuple[int, int],
    len_max: int,
    progress: bool = False,
) -> FiberSearchResult:
    """Exhaustive search for invariant curve classes C = -m*K + nu*F on the contracted surface.

    Multiplicity multisets are explored through their reachable
    (sum, sum of squares) pairs, which is all the equations depend on.
    """
    omega = _omega(r)
    explored = 0
    witness: FiberCandidate | None = None
    for m in tqdm(range(1, m_max + 1), desc=f"Fiber search r={r}", unit="m", disable=not progress):
        seen: dict[tuple[int, int], tuple[int, ...]] = {(0, 0): ()}
        frontier = [(0, 0)]
        for length in range(len_max + 1):
            for s1, s2 in sorted(frontier):
                nu = _witness_nu(omega, m, s1, s2, nu_range)
                if nu is not None:
                    witness = FiberCandidate(m, nu, tuple(sorted(seen[(s1, s2)])))
                    break
            if witness is not None or length == len_max:
                break
            nxt = []
            for s1, s2 in sorted(frontier):
                base = seen[(s1, s2)]
                for v in range(1, 2 * m + 1):
                    key = (s1 + v, s2 + v * v)
                    if key not in seen:
                        seen[key] = base + (v,)
                        nxt.append(key)
            frontier = nxt
        explored += len(seen)
        if witness is not None:
            break
    if witness is not None and not fiber_equations_check(r, witness):
        raise ArithmeticError(f"fiber witness fails its own equations: {witness}")
    result = FiberSearchResult(
        r=r,
        infeasible=witness is None,
        symbolic_infeasible=omega <= 0,
        witness=witness,
        m_max=m_max,
        nu_range=nu_range,
        len_max=len_max,
        states=explored,
    )
    log.debug(f"Fiber search r={r}: infeasible={result.infeasible} after {explored} states")
    return result
