import logging
from abc import ABC, abstractmethod
from typing import Sequence

from chatelet_decider.domain.models import SurfaceStepInput
from chatelet_decider.errors import InputError, PreconditionError
from chatelet_decider.surface.model import (
    PointSpec,
    SurfaceModel,
    blow_down,
    blow_up,
    elementary_transform,
)

log = logging.getLogger(__name__)


class SurfaceStep(ABC):

    @abstractmethod
    def apply(self, model: SurfaceModel) -> SurfaceModel:
        pass


class BlowUpStep(SurfaceStep):
    def __init__(self, label: str, point: PointSpec | None = None):
        self.label = label
        self.point = point or PointSpec()

    def apply(self, model: SurfaceModel) -> SurfaceModel:
        return blow_up(model, self.point, self.label)


class BlowDownStep(SurfaceStep):
    def __init__(self, curve: str):
        self.curve = curve

    def apply(self, model: SurfaceModel) -> SurfaceModel:
        return blow_down(model, self.curve)


class ElementaryTransformStep(SurfaceStep):
    def __init__(self, curve: str, label: str, point: PointSpec):
        self.curve = curve
        self.label = label
        self.point = point

    def apply(self, model: SurfaceModel) -> SurfaceModel:
        return elementary_transform(model, self.curve, self.point, self.label)


def step_from_input(step: SurfaceStepInput) -> SurfaceStep:
    point = PointSpec(incidences=step.incidences)
    match step.op:
        case "blow_up":
            if not step.label:
                raise InputError("blow_up needs a label")
            return BlowUpStep(step.label, point)
        case "blow_down":
            if not step.curve:
                raise InputError("blow_down needs a curve")
            return BlowDownStep(step.curve)
        case "elementary_transform":
            if not step.curve or not step.label:
                raise InputError("elementary_transform needs a curve and a label")
            return ElementaryTransformStep(step.curve, step.label, point)
        case _:
            raise InputError(f"Unknown surface op: {step.op}")


def apply_steps(
    model: SurfaceModel, steps: Sequence[SurfaceStep]
) -> tuple[SurfaceModel, list[int]]:
    """Run the steps in order; returns the final model and the canonical squares seen."""
    squares = [model.canonical_square()]
    for step in steps:
        log.debug(f"Applying surface step: {step.__class__.__name__}")
        model = step.apply(model)
        squares.append(model.canonical_square())
    return model, squares


def resolution_steps(r: int) -> list[SurfaceStep]:
    """Blow-ups resolving the conjugation involution of the quadric.

    r points on u = 0, then a chain of r infinitely near points starting
    at (x, u) = (inf, inf), each on the previous exceptional curve and on
    the strict transform of u = inf.
    """
    if r < 1:
        raise PreconditionError("r must be positive")
    steps: list[SurfaceStep] = [BlowUpStep(f"E{i}") for i in range(1, r + 1)]
    steps.append(BlowUpStep(f"E{r + 1}", PointSpec(incidences={"x_inf": 1, "u_inf": 1})))
    for j in range(r + 2, 2 * r + 1):
        steps.append(
            BlowUpStep(f"E{j}", PointSpec(incidences={f"E{j - 1}": 1, "u_inf": 1}))
        )
    return steps


def contraction_steps(r: int) -> list[SurfaceStep]:
    """The r finite blow-ups followed by r/2 elementary transforms at infinity."""
    if r % 2:
        raise PreconditionError("evenize first")
    steps: list[SurfaceStep] = [BlowUpStep(f"E{i}") for i in range(1, r + 1)]
    fiber = "x_inf"
    for j in range(r + 1, 3 * r // 2 + 1):
        label = f"E{j}"
        steps.append(
            ElementaryTransformStep(
                fiber, label, PointSpec(incidences={fiber: 1, "u_inf": 1})
            )
        )
        fiber = label
    return steps
