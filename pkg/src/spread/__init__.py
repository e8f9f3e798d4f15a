"""
Técnica do vetor-mãe em espaços (Σ X_n)_p, (Σ X_n)_0 e (Σ X_n)_p⁺.
"""

from src.spread.certificates import (
    PlusSpaceLadder,
    PlusSpaceReport,
    RangeDecay,
    RungResult,
    SlotIdentification,
    StrictInclusionResult,
    divergence_chain_check,
    identify_slot_vector,
    plus_space_cauchy_check,
    range_decay_check,
    range_divergence_certificate,
    range_independence_check,
    strict_inclusion_check,
)
from src.spread.isomorphs import ComponentSpaceFamily, IsomorphFamily, vector_norm
from src.spread.tensor import (
    T_coord,
    T_coord_direct_sum,
    T_norm_bound_check,
    TensorNormReport,
    TensorSequence,
    bilinearity_holds,
    block_positions_map,
    make_y,
    spread_norm_identity,
    tensor_coord,
    tilde_s,
)

__all__ = [
    "ComponentSpaceFamily",
    "IsomorphFamily",
    "PlusSpaceLadder",
    "PlusSpaceReport",
    "RangeDecay",
    "RungResult",
    "SlotIdentification",
    "StrictInclusionResult",
    "T_coord",
    "T_coord_direct_sum",
    "T_norm_bound_check",
    "TensorNormReport",
    "TensorSequence",
    "bilinearity_holds",
    "block_positions_map",
    "divergence_chain_check",
    "identify_slot_vector",
    "make_y",
    "plus_space_cauchy_check",
    "range_decay_check",
    "range_divergence_certificate",
    "range_independence_check",
    "spread_norm_identity",
    "strict_inclusion_check",
    "tensor_coord",
    "tilde_s",
    "vector_norm",
]
