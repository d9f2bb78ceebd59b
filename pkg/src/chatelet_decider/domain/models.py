from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class AbelianInvariants(BaseModel):
    model_config = ConfigDict(frozen=True)

    divisors: list[int] = Field(
        default_factory=list,
        description="Elementary divisors >= 2, each dividing the next",
    )
    free_rank: int = Field(default=0, description="Rank of the torsion-free part")

    @property
    def is_trivial(self) -> bool:
        return not self.divisors and self.free_rank == 0

    @property
    def length(self) -> int:
        return len(self.divisors)


class Status(str, Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNKNOWN = "UNKNOWN"


class Verdict(str, Enum):
    RATIONAL = "RATIONAL"
    NOT_RATIONAL = "NOT_RATIONAL"
    UNDECIDED = "UNDECIDED"


class Criterion(str, Enum):
    SQUARE_COEFFICIENT = "square-coefficient"
    SQUARE_CLASS = "square-class-reduction"
    QUADRATIC_FORM = "quadratic-form-criterion"
    EVENIZATION = "odd-degree-evenization"
    SPLIT_FACTOR = "split-factor-removal"
    COHOMOLOGY = "h1-obstruction"
    FIBER_INFEASIBILITY = "fiber-class-infeasibility"
    DEL_PEZZO_DESCENT = "del-pezzo-descent"


class ConditionStatus(BaseModel):
    status: Status = Field(description="Evaluation of the condition")
    evidence: str | None = Field(
        default=None, description="Witness or argument behind the status"
    )


class ConditionReport(BaseModel):
    cond1: ConditionStatus = Field(description="a is not a rational square")
    cond2: ConditionStatus = Field(description="P is squarefree of degree >= 3")
    cond3: ConditionStatus = Field(
        description="Q(sqrt(a)) lies in the splitting field of P"
    )
    cond4: ConditionStatus = Field(
        description="Every irreducible factor stays irreducible over Q(sqrt(a))"
    )
    cond5: ConditionStatus = Field(description="Characteristic is not 2")


class ReasonStep(BaseModel):
    step: str = Field(description="Short name of the argument")
    criterion: Criterion = Field(description="Criterion the step relies on")
    primary: bool = Field(default=False, description="Step that carries the verdict")
    data: dict[str, Any] = Field(default_factory=dict)


class ReductionStep(BaseModel):
    step: str = Field(description="Transformation applied")
    criterion: Criterion = Field(description="Criterion licensing the move")
    before: dict[str, Any] = Field(default_factory=dict)
    after: dict[str, Any] = Field(default_factory=dict)
    detail: dict[str, Any] = Field(default_factory=dict)


class CohomologyReport(BaseModel):
    h1: list[int] = Field(default_factory=list)
    h_minus1: list[int] = Field(default_factory=list)
    closed_form_j: int | None = Field(
        default=None, description="Closed-form rank of H^1 from the block structure"
    )
    group_order: int | None = None
    group_source: str | None = Field(
        default=None, description="'model' or 'certificate'"
    )


class ProblemSummary(BaseModel):
    a: str
    poly: list[str]
    blocks: list[int] = Field(default_factory=list)


class VerdictReport(BaseModel):
    verdict: Verdict
    reason_chain: list[ReasonStep] = Field(default_factory=list)
    conditions: ConditionReport | None = None
    invariants: CohomologyReport = Field(default_factory=CohomologyReport)
    reduction_trace: list[ReductionStep] = Field(default_factory=list)
    problem: ProblemSummary | None = None
    canonical: ProblemSummary | None = None
    notes: list[str] = Field(default_factory=list)


class GroupCertificate(BaseModel):
    degree: int = Field(description="Number of roots the permutations act on")
    generators: list[list[int]] = Field(
        description="Permutations of the roots as image lists (0-based)"
    )
    in_n: list[bool] = Field(description="Whether each generator fixes sqrt(a)")


class Cond3Certificate(BaseModel):
    holds: bool
    justification: str


class Certificates(BaseModel):
    galois_group: GroupCertificate | None = None
    cond3: Cond3Certificate | None = None


class ProblemInput(BaseModel):
    a: str | int
    poly: list[str | int]
    certificates: Certificates | None = None


class LatticeScenario(BaseModel):
    rank: int
    generators: list[list[list[int]]]
    in_n: list[bool]


class SurfaceStepInput(BaseModel):
    op: str = Field(description="blow_up, blow_down or elementary_transform")
    label: str | None = None
    curve: str | None = None
    incidences: dict[str, int] = Field(default_factory=dict)


class SurfaceScenario(BaseModel):
    steps: list[SurfaceStepInput] = Field(default_factory=list)
