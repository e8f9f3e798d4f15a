"""
Afirmações de pertencimento de sequências a espaços clássicos.

Uma MembershipClaim só é considerada certificada junto com os
veredictos produzidos pelo motor de normas (src.norms.claims).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class SpaceTag(str, Enum):
    """Espaços de sequências suportados."""

    ELL_P = "ell_p"
    C0 = "c0"
    ELL_P_PLUS = "ell_p_plus"


class Polarity(str, Enum):
    """Sentido da afirmação."""

    MEMBER = "member"
    NON_MEMBER = "non_member"


@dataclass(frozen=True)
class MembershipClaim:
    """
    Afirmação "ξ ∈ espaço" ou "ξ ∉ espaço".

    Atributos:
        space_tag: espaço alvo
        exponent: p de ℓ_p / ℓ_p⁺ (ignorado para c₀)
        polarity: membro ou não membro
        budget: maior índice somado na busca do certificado
        epsilon: limiar de decaimento usado para c₀
        ladder_rungs: degraus p + 1/k testados para ℓ_p⁺
    """

    space_tag: SpaceTag
    polarity: Polarity
    budget: int
    exponent: Optional[float] = None
    epsilon: float = 1e-2
    ladder_rungs: int = 6

    def describe(self) -> str:
        sign = "∈" if self.polarity == Polarity.MEMBER else "∉"
        if self.space_tag == SpaceTag.C0:
            return f"{sign} c0"
        return f"{sign} {self.space_tag.value}({self.exponent:g})"
