from .factorization import (
    Factorization,
    factor_rational_poly,
    squarefree_decomposition,
    squarefree_part,
)
from .norm_equation import (
    Impossible,
    NoneFound,
    Witness,
    solve_norm_equation_bounded,
    solve_ternary_bounded,
)
from .poly import RationalPoly, poly_gcd, poly_product
from .quadratic import Irreducible, QuadExtPoly, QuadraticSplit, factor_over_quadratic
from .strategies import FactorizationStrategy

__all__ = [
    "Factorization",
    "FactorizationStrategy",
    "Impossible",
    "Irreducible",
    "NoneFound",
    "QuadExtPoly",
    "QuadraticSplit",
    "RationalPoly",
    "Witness",
    "factor_over_quadratic",
    "factor_rational_poly",
    "poly_gcd",
    "poly_product",
    "solve_norm_equation_bounded",
    "solve_ternary_bounded",
    "squarefree_decomposition",
    "squarefree_part",
]
