from .blocks import (
    BlockStructure,
    SublatticeQuotients,
    block_sublattice_quotients,
    h1_closed_form,
)
from .picard import (
    GaloisModel,
    build_contracted_picard,
    build_resolved_picard,
    model_group_generators,
    split_core_summand,
    validate_root_generators,
)

__all__ = [
    "BlockStructure",
    "GaloisModel",
    "SublatticeQuotients",
    "block_sublattice_quotients",
    "build_contracted_picard",
    "build_resolved_picard",
    "h1_closed_form",
    "model_group_generators",
    "split_core_summand",
    "validate_root_generators",
]
