from .model import (
    PointSpec,
    SurfaceModel,
    blow_down,
    blow_up,
    elementary_transform,
    intersect,
    new_quadric,
)
from .steps import apply_steps, contraction_steps, resolution_steps, step_from_input

__all__ = [
    "PointSpec",
    "SurfaceModel",
    "apply_steps",
    "blow_down",
    "blow_up",
    "contraction_steps",
    "elementary_transform",
    "intersect",
    "new_quadric",
    "resolution_steps",
    "step_from_input",
]
