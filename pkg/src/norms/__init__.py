"""
Motor de normas ℓ_q com certificados de convergência e divergência.
"""

from src.norms.claims import ClaimOutcome, certify_membership
from src.norms.engine import (
    BoundCheck,
    Converged,
    ConvergenceVerdict,
    DivergenceCertificate,
    NormPolicy,
    Undecided,
    bound_check,
    c0_decay_check,
    classify,
    condensation_certificate,
    has_l1_certificate,
    lq_accumulator,
    lq_partial,
    lq_partial_on_block,
    recheck_certificate,
    sup_norm_truncated,
)
from src.norms.envelopes import EnvelopeRegistry, TailEnvelope, get_envelope_registry
from src.norms.summation import EPSILON, CompensatedSum, plain_total

__all__ = [
    "BoundCheck",
    "ClaimOutcome",
    "CompensatedSum",
    "Converged",
    "ConvergenceVerdict",
    "DivergenceCertificate",
    "EnvelopeRegistry",
    "NormPolicy",
    "TailEnvelope",
    "Undecided",
    "bound_check",
    "c0_decay_check",
    "certify_membership",
    "classify",
    "EPSILON",
    "condensation_certificate",
    "get_envelope_registry",
    "has_l1_certificate",
    "lq_accumulator",
    "lq_partial",
    "lq_partial_on_block",
    "plain_total",
    "recheck_certificate",
    "sup_norm_truncated",
]
