from __future__ import annotations

import logging
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict

from chatelet_decider.errors import DepthCapError, PreconditionError

log = logging.getLogger(__name__)


def _check_r(r: int) -> None:
    if r not in (4, 6):
        raise PreconditionError(f"descent runs on r = 4 or r = 6, got {r}")


def nu_prime_bound(r: int, m: int) -> range:
    """Admissible nu with -(omega/4)*m < nu <= -1, omega = 8 - r."""
    _check_r(r)
    if m < 1:
        raise PreconditionError("m must be positive")
    omega = 8 - r
    return range((-omega * m) // 4 + 1, 0)


@dataclass(frozen=True)
class DescentState:
    r: int
    m: int
    history: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_r(self.r)

    @property
    def admissible(self) -> range:
        if self.m < 1:
            return range(0)
        return nu_prime_bound(self.r, self.m)

    @property
    def terminal(self) -> bool:
        """No invariant curve class of positive self-intersection remains."""
        return len(self.admissible) == 0


def descent_step(s: DescentState, nu: int) -> DescentState:
    if s.terminal or nu not in s.admissible:
        raise PreconditionError(f"nu = {nu} is not admissible at m = {s.m}")
    m = s.m + nu if s.r == 4 else s.m + 2 * nu
    if m >= s.m:
        raise ArithmeticError("descent did not decrease m")
    return DescentState(s.r, m, s.history + (nu,))


class DescentSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    r: int
    m0: int
    branches: int
    max_depth: int
    min_depth: int
    states: list[int]
    terminal_values: list[int]
    all_terminal: bool = True


def descent_exhaust(r: int, m0: int, depth_cap: int = 64) -> DescentSummary:
    """Walk every admissible nu-sequence from m0 and confirm each one dead-ends."""
    _check_r(r)
    if m0 < 1:
        raise PreconditionError("m0 must be positive")

    reachable = {m0}
    stack = [m0]
    while stack:
        m = stack.pop()
        state = DescentState(r, m)
        for nu in state.admissible:
            nxt = descent_step(state, nu).m
            if nxt not in reachable:
                reachable.add(nxt)
                stack.append(nxt)

    # successors are strictly smaller, so ascending order is a topological order
    branches: dict[int, int] = {}
    deepest: dict[int, int] = {}
    shallowest: dict[int, int] = {}
    for m in sorted(reachable):
        state = DescentState(r, m)
        if state.terminal:
            branches[m], deepest[m], shallowest[m] = 1, 0, 0
            continue
        children = [descent_step(state, nu).m for nu in state.admissible]
        branches[m] = sum(branches[c] for c in children)
        deepest[m] = 1 + max(deepest[c] for c in children)
        shallowest[m] = 1 + min(shallowest[c] for c in children)
        if deepest[m] > depth_cap:
            raise DepthCapError(
                f"descent from m0 = {m0} exceeds depth cap {depth_cap}", bound=depth_cap
            )

    summary = DescentSummary(
        r=r,
        m0=m0,
        branches=branches[m0],
        max_depth=deepest[m0],
        min_depth=shallowest[m0],
        states=sorted(reachable, reverse=True),
        terminal_values=sorted(m for m in reachable if DescentState(r, m).terminal),
    )
    log.debug(f"Descent r={r} m0={m0}: {summary.branches} branches, depth {summary.max_depth}")
    return summary
