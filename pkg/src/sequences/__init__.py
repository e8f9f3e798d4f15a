"""
Sequências escalares preguiçosas e vetores-mãe.
"""

from src.sequences.lazy import (
    MOTHER_VECTORS,
    ScalarSequence,
    finite_sequence,
    geometric_sequence,
    lin_comb,
    mother_c0,
    mother_ell_p,
    mother_ell_p_plus,
    mother_vector,
    power_sequence,
    unit_vector,
    zero_sequence,
)
from src.sequences.membership import MembershipClaim, Polarity, SpaceTag

__all__ = [
    "MOTHER_VECTORS",
    "MembershipClaim",
    "Polarity",
    "ScalarSequence",
    "SpaceTag",
    "finite_sequence",
    "geometric_sequence",
    "lin_comb",
    "mother_c0",
    "mother_ell_p",
    "mother_ell_p_plus",
    "mother_vector",
    "power_sequence",
    "unit_vector",
    "zero_sequence",
]
