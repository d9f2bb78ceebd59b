from .cohomology import fixed_sublattice, h1_via_dual, quotient_invariants, tate_h_minus1
from .group import GLattice, MatrixGroup, close_group
from .snf import SNFResult, integer_kernel, lattice_basis, smith_normal_form

__all__ = [
    "GLattice",
    "MatrixGroup",
    "SNFResult",
    "close_group",
    "fixed_sublattice",
    "h1_via_dual",
    "integer_kernel",
    "lattice_basis",
    "quotient_invariants",
    "smith_normal_form",
    "tate_h_minus1",
]
