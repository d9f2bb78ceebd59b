from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from pydantic import ValidationError

from chatelet_decider.algebra.poly import RationalPoly, poly_product
from chatelet_decider.algebra.rational import format_rational, parse_rational
from chatelet_decider.chatelet.blocks import BlockStructure
from chatelet_decider.domain.models import Certificates, ProblemInput, ProblemSummary
from chatelet_decider.errors import InputError


@dataclass(frozen=True)
class Problem:
    """The surface z^2 = a*y^2 + P(x)."""

    a: Fraction
    poly: RationalPoly
    certificates: Certificates | None = None

    def __post_init__(self) -> None:
        if self.a == 0:
            raise InputError("a must be nonzero")
        if self.poly.is_zero:
            raise InputError("P must be nonzero")

    @classmethod
    def from_input(cls, data: ProblemInput | dict) -> Problem:
        if isinstance(data, dict):
            try:
                data = ProblemInput.model_validate(data)
            except ValidationError as e:
                raise InputError(f"Malformed problem: {e}") from e
        return cls(
            a=parse_rational(data.a),
            poly=RationalPoly.from_strings(data.poly),
            certificates=data.certificates,
        )

    def summary(self) -> ProblemSummary:
        return ProblemSummary(a=format_rational(self.a), poly=self.poly.to_strings())


@dataclass(frozen=True)
class CanonicalProblem:
    """Normalized problem: a and the unit are squarefree integers, every factor
    is monic, irreducible over Q and inert over Q(sqrt(a)).

    Roots are indexed block by block in factor order.
    """

    a: Fraction
    unit: Fraction
    factors: tuple[RationalPoly, ...]
    odd_form: CanonicalProblem | None = field(default=None, compare=False)
    # for each factor, the odd_form factor it came from (None for the root at zero)
    origins: tuple[int | None, ...] = field(default=(), compare=False)

    @property
    def poly(self) -> RationalPoly:
        return poly_product(self.factors) * self.unit

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    @property
    def blocks(self) -> BlockStructure | None:
        if not self.factors:
            return None
        return BlockStructure.of(f.degree for f in self.factors)

    @property
    def evenized(self) -> bool:
        return self.odd_form is not None

    def lift_root_action(self, images: Sequence[int]) -> tuple[int, ...]:
        """Carry a permutation of the odd form's roots over to these roots.

        Roots keep their position inside their block; the root at zero is fixed.
        """
        if self.odd_form is None:
            return tuple(images)
        old = self.odd_form.blocks.ranges()
        new = self.blocks.ranges()
        relabel: dict[int, int] = {}
        fixed = []
        for block, origin in zip(new, self.origins):
            if origin is None:
                fixed.extend(block)
                continue
            relabel.update(zip(old[origin], block))
        lifted = [0] * self.degree
        for root, image in enumerate(images):
            lifted[relabel[root]] = relabel[image]
        for root in fixed:
            lifted[root] = root
        return tuple(lifted)

    def summary(self) -> ProblemSummary:
        blocks = self.blocks
        return ProblemSummary(
            a=format_rational(self.a),
            poly=self.poly.to_strings(),
            blocks=list(blocks.block_degrees) if blocks else [],
        )
