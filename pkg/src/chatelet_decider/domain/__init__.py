from .models import (
    AbelianInvariants,
    Certificates,
    CohomologyReport,
    ConditionReport,
    ConditionStatus,
    Criterion,
    ProblemInput,
    ReasonStep,
    ReductionStep,
    Status,
    Verdict,
    VerdictReport,
)

__all__ = [
    "AbelianInvariants",
    "Certificates",
    "CohomologyReport",
    "ConditionReport",
    "ConditionStatus",
    "Criterion",
    "ProblemInput",
    "ReasonStep",
    "ReductionStep",
    "Status",
    "Verdict",
    "VerdictReport",
]
