"""
Envelopes de cauda registrados por família de sequência.

Um envelope fornece, para a soma Σ_{j>N} |ξ_j|^q, um limite superior
(teste da integral, ∫_N^∞ g) e um limite inferior (∫_{N+1}^∞ g, ou 0 quando
não há forma fechada). math.inf sinaliza cauda divergente.

Os envelopes são registrados à mão para cada vetor-mãe embutido: não há
integração simbólica automática.
"""

import math
from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from src.config.logging import get_logger
from src.sequences.lazy import ScalarSequence

logger = get_logger(__name__)


class TailEnvelope(ABC):
    """Limites da cauda Σ_{j>N} |ξ_j|^q de uma família de sequências."""

    family: str = ""

    @abstractmethod
    def upper(self, seq: ScalarSequence, q: float, n: int) -> float:
        """Limite superior de Σ_{j>n} |ξ_j|^q (math.inf se divergente)."""

    def lower(self, seq: ScalarSequence, q: float, n: int) -> float:
        """Limite inferior de Σ_{j>n} |ξ_j|^q (0 por padrão)."""
        return 0.0

    def diverges(self, seq: ScalarSequence, q: float) -> bool:
        return math.isinf(self.upper(seq, q, 2))


class EllPEnvelope(TailEnvelope):
    """
    ξ_j = (j·log²(j+1))^{-1/p}; termo da q-soma g(x) = (x·log²(x+1))^{-s}, s = q/p.

    - s > 1: ∫_N^∞ g <= log(N+1)^{-2s} · N^{1-s} / (s-1)
    - s = 1: ∫_N^∞ g <= ∫_N^∞ dx/(x log² x) = 1/log N  (N >= 2);
             ∫_{N+1}^∞ g >= 1/log(N+2)
    - s < 1: divergente
    """

    family = "ell_p"

    def upper(self, seq: ScalarSequence, q: float, n: int) -> float:
        s = q / seq.params["p"]
        if s > 1:
            return math.log1p(n) ** (-2 * s) * n ** (1 - s) / (s - 1)
        if s == 1:
            return 1.0 / math.log(n) if n >= 2 else math.inf
        return math.inf

    def lower(self, seq: ScalarSequence, q: float, n: int) -> float:
        s = q / seq.params["p"]
        if s == 1:
            return 1.0 / math.log(n + 2)
        return 0.0


class PowerEnvelope(TailEnvelope):
    """ξ_j = j^{-1/r}; g(x) = x^{-s}, s = q/r; cauda finita sse s > 1."""

    family = "power"

    def upper(self, seq: ScalarSequence, q: float, n: int) -> float:
        s = q / seq.params["r"]
        if s > 1:
            return n ** (1 - s) / (s - 1)
        return math.inf

    def lower(self, seq: ScalarSequence, q: float, n: int) -> float:
        s = q / seq.params["r"]
        if s > 1:
            return (n + 1) ** (1 - s) / (s - 1)
        return 0.0


class C0Envelope(TailEnvelope):
    """ξ_j = 1/log(j+1): Σ 1/log^q(j+1) diverge para todo q > 0."""

    family = "c0"

    def upper(self, seq: ScalarSequence, q: float, n: int) -> float:
        return math.inf


class GeometricEnvelope(TailEnvelope):
    """Cauda geométrica exata: Σ_{j>N} |c|^q ρ^{qj} = |c|^q ρ^{q(N+1)} / (1 - ρ^q)."""

    family = "geometric"

    def _tail(self, seq: ScalarSequence, q: float, n: int) -> float:
        ratio = seq.params["ratio"] ** q
        return abs(seq.params["scale"]) ** q * ratio ** (n + 1) / (1 - ratio)

    def upper(self, seq: ScalarSequence, q: float, n: int) -> float:
        return self._tail(seq, q, n)

    def lower(self, seq: ScalarSequence, q: float, n: int) -> float:
        return self._tail(seq, q, n)


class EnvelopeRegistry:
    """
    Registro central de envelopes de cauda.

    Exemplo:
        registry = get_envelope_registry()
        envelope = registry.for_sequence(mother_ell_p(2))
        envelope.upper(seq, 2.0, 1000)  # 1/log(1000)
    """

    def __init__(self) -> None:
        self._envelopes: Dict[str, TailEnvelope] = {}
        self._logger = get_logger("envelope_registry")

    def register(self, envelope: TailEnvelope) -> None:
        if envelope.family in self._envelopes:
            self._logger.warning("Envelope substituído", family=envelope.family)
        self._envelopes[envelope.family] = envelope
        self._logger.debug("Envelope registrado", family=envelope.family)

    def get(self, family: str) -> Optional[TailEnvelope]:
        return self._envelopes.get(family)

    def for_sequence(self, seq: ScalarSequence) -> Optional[TailEnvelope]:
        if seq.family is None:
            return None
        return self.get(seq.family)

    def list_families(self) -> List[str]:
        return sorted(self._envelopes)


_global_registry: Optional[EnvelopeRegistry] = None


def get_envelope_registry() -> EnvelopeRegistry:
    """Retorna a instância global do registro, com os envelopes embutidos."""
    global _global_registry
    if _global_registry is None:
        _global_registry = EnvelopeRegistry()
        for envelope in (EllPEnvelope(), PowerEnvelope(), C0Envelope(), GeometricEnvelope()):
            _global_registry.register(envelope)
    return _global_registry
