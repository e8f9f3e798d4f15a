"""
Certificação de afirmações de pertencimento.

Traduz uma MembershipClaim em uma bateria de classificações do motor de
normas e consolida o resultado:

- ℓ_p, membro: Converged em q = p
- ℓ_p, não membro: divergência em q = p (e, para vetores-mãe, em q < p
  testado pelo chamador)
- c₀, membro: índice de decaimento para ε
- c₀, não membro: não há certificado finito de "não tende a zero" pela
  cauda; devolve Undecided
- ℓ_p⁺, membro: Converged em cada degrau p + 1/k, k = 1..K
- ℓ_p⁺, não membro: divergência em algum degrau
"""

from dataclasses import dataclass, field
from typing import List, Optional

from src.config.logging import get_logger
from src.norms.engine import (
    Converged,
    ConvergenceVerdict,
    DivergenceCertificate,
    NormPolicy,
    Undecided,
    c0_decay_check,
    classify,
)
from src.sequences.lazy import ScalarSequence
from src.sequences.membership import MembershipClaim, Polarity, SpaceTag
from src.utils.errors import CertificateNotFoundError, DomainError

logger = get_logger(__name__)


@dataclass(frozen=True)
class ClaimOutcome:
    """Afirmação junto dos veredictos que a sustentam."""

    claim: MembershipClaim
    certified: bool
    verdicts: List[ConvergenceVerdict] = field(default_factory=list)
    decay_index: Optional[int] = None

    @property
    def undecided(self) -> bool:
        return not self.certified and any(isinstance(v, Undecided) for v in self.verdicts)


def _ladder(p: float, rungs: int) -> List[float]:
    return [p + 1.0 / k for k in range(1, rungs + 1)]


def certify_membership(
    seq: ScalarSequence,
    claim: MembershipClaim,
    policy: Optional[NormPolicy] = None,
) -> ClaimOutcome:
    """
    Procura o certificado que sustenta a afirmação.

    Exemplo:
        claim = MembershipClaim(SpaceTag.ELL_P, Polarity.MEMBER, budget=10**5, exponent=2.0)
        certify_membership(mother_ell_p(2), claim).certified  # True
    """
    base = policy or NormPolicy()
    policy = base.model_copy(update={"budget": claim.budget})

    if claim.space_tag != SpaceTag.C0 and claim.exponent is None:
        raise DomainError(f"Afirmação {claim.space_tag.value} exige expoente")

    if claim.space_tag == SpaceTag.C0:
        if claim.polarity == Polarity.NON_MEMBER:
            reason = "não pertencer a c₀ não tem certificado finito"
            verdict = Undecided(budget=claim.budget, partial=0.0, reason=reason)
            return ClaimOutcome(claim=claim, certified=False, verdicts=[verdict])
        try:
            index = c0_decay_check(seq, claim.epsilon, scan_budget=claim.budget)
        except CertificateNotFoundError as exc:
            verdict = Undecided(budget=exc.budget, partial=0.0, reason=str(exc))
            return ClaimOutcome(claim=claim, certified=False, verdicts=[verdict])
        return ClaimOutcome(claim=claim, certified=True, decay_index=index)

    exponent = float(claim.exponent)  # type: ignore[arg-type]
    if claim.space_tag == SpaceTag.ELL_P:
        exponents = [exponent]
    else:
        exponents = _ladder(exponent, claim.ladder_rungs)

    verdicts = [classify(seq, q, policy) for q in exponents]
    if claim.polarity == Polarity.MEMBER:
        certified = all(isinstance(v, Converged) for v in verdicts)
    elif claim.space_tag == SpaceTag.ELL_P:
        certified = isinstance(verdicts[0], DivergenceCertificate)
    else:
        certified = any(isinstance(v, DivergenceCertificate) for v in verdicts)

    logger.info(
        "Afirmação avaliada",
        sequence=seq.label,
        claim=claim.describe(),
        certified=certified,
    )
    return ClaimOutcome(claim=claim, certified=certified, verdicts=verdicts)
