from enum import Enum

from chatelet_decider.algebra.backends import (
    FactorizationBackend,
    KroneckerBackend,
    SympyBackend,
)


class FactorizationStrategy(Enum):
    KRONECKER = "kronecker"
    SYMPY = "sympy"

    def create_backend(
        self, max_degree: int = 8, max_coeff: int = 10**6
    ) -> FactorizationBackend:
        match self:
            case FactorizationStrategy.KRONECKER:
                return KroneckerBackend(max_degree=max_degree, max_coeff=max_coeff)
            case FactorizationStrategy.SYMPY:
                return SympyBackend()
            case _:
                raise ValueError(f"Unknown strategy: {self}")
