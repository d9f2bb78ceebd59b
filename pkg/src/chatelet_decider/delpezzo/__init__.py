from .conics import ConicClass, conic_partner, enumerate_conic_classes, pairing_table
from .descent import DescentState, DescentSummary, descent_exhaust, descent_step, nu_prime_bound
from .fibers import FiberCandidate, FiberSearchResult, fiber_equations_check, fiber_infeasible

__all__ = [
    "ConicClass",
    "DescentState",
    "DescentSummary",
    "FiberCandidate",
    "FiberSearchResult",
    "conic_partner",
    "descent_exhaust",
    "descent_step",
    "enumerate_conic_classes",
    "fiber_equations_check",
    "fiber_infeasible",
    "nu_prime_bound",
    "pairing_table",
]
