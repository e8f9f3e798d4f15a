"""
Motor de normas ℓ_q: somas parciais, norma do sup, índices de decaimento
e classificação de convergência com certificados explícitos.

Este módulo implementa:
- lq_partial / lq_partial_on_block: Σ_{j<=N} |ξ_j|^q com soma compensada
- classify: Converged | DivergenceCertificate | Undecided
- certificado por condensação para caudas divergentes além do orçamento
- sup_norm_truncated e c0_decay_check
- recheck_certificate: rechecagem independente por soma simples

A q-soma Σ|ξ_j|^q é calculada diretamente, inclusive para 0 < q < 1;
os relatórios a rotulam como "q_sum".
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.config.logging import get_logger
from src.config.settings import get_settings
from src.norms.envelopes import get_envelope_registry
from src.norms.summation import CompensatedSum, plain_total
from src.sequences.lazy import ScalarSequence
from src.utils.errors import CertificateNotFoundError, DomainError

logger = get_logger(__name__)

# Índices acima disso são avaliados em float64 (além do alcance de int64)
_INT_INDEX_LIMIT = 2**62


class NormPolicy(BaseModel):
    """Orçamento e limiares de uma classificação."""

    model_config = ConfigDict(frozen=True)

    budget: int = Field(default=1_000_000, ge=1, description="Maior índice somado por força bruta")
    divergence_threshold: float = Field(default=1e6, gt=0, description="Limiar de divergência")
    tolerance: float = Field(default=1e-6, gt=0, description="Meta relativa do resto")


# ============================================================
# Veredictos
# ============================================================


@dataclass(frozen=True)
class Converged:
    """
    Soma parcial com limite de resto pelo teste da integral.

    value + remainder_lower <= Σ_{j>=1} |ξ_j|^q <= value + remainder_bound
    """

    value: float
    remainder_bound: float
    at_index: int
    remainder_lower: float = 0.0
    error_bound: float = 0.0
    meets_tolerance: bool = True

    kind = "converged"

    @property
    def corrected_value(self) -> float:
        """Estimativa central após correção pelo resto."""
        return self.value + 0.5 * (self.remainder_lower + self.remainder_bound)

    @property
    def corrected_error(self) -> float:
        return 0.5 * (self.remainder_bound - self.remainder_lower) + self.error_bound

    def as_numbers(self) -> Dict[str, Union[float, int, str, bool]]:
        return {
            "verdict": self.kind,
            "q_sum": self.value,
            "remainder_bound": self.remainder_bound,
            "remainder_lower": self.remainder_lower,
            "at_index": self.at_index,
            "corrected_value": self.corrected_value,
            "meets_tolerance": self.meets_tolerance,
        }


@dataclass(frozen=True)
class DivergenceCertificate:
    """
    Testemunha finita de divergência: a soma parcial (ou um limite
    inferior dela) no índice crossing_index excede estritamente threshold.
    """

    threshold: float
    crossing_index: int
    partial: float
    method: str = "partial_sum"
    notes: Dict[str, float] = field(default_factory=dict)

    kind = "diverged"

    def as_numbers(self) -> Dict[str, Union[float, int, str, bool]]:
        numbers: Dict[str, Union[float, int, str, bool]] = {
            "verdict": self.kind,
            "threshold": self.threshold,
            "crossing_index": self.crossing_index,
            "partial": self.partial,
            "method": self.method,
        }
        numbers.update(self.notes)
        return numbers


@dataclass(frozen=True)
class Undecided:
    """Orçamento esgotado sem certificado em nenhum sentido."""

    budget: int
    partial: float
    reason: str = ""

    kind = "undecided"

    def as_numbers(self) -> Dict[str, Union[float, int, str, bool]]:
        return {
            "verdict": self.kind,
            "budget": self.budget,
            "partial": self.partial,
            "reason": self.reason,
        }


ConvergenceVerdict = Union[Converged, DivergenceCertificate, Undecided]


@dataclass(frozen=True)
class BoundCheck:
    """Resultado de uma desigualdade lhs <= rhs com folga tolerada."""

    lhs: float
    rhs: float
    holds: bool

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def as_numbers(self) -> Dict[str, Union[float, bool]]:
        return {"lhs": self.lhs, "rhs": self.rhs, "slack": self.slack, "holds": self.holds}


def bound_check(lhs: float, rhs: float, tolerance: float = 1e-12) -> BoundCheck:
    """lhs <= rhs + tolerance·max(1, |rhs|)."""
    return BoundCheck(lhs=lhs, rhs=rhs, holds=lhs <= rhs + tolerance * max(1.0, abs(rhs)))


# ============================================================
# Somas parciais
# ============================================================


def _check_exponent(q: float) -> None:
    if not q > 0:
        raise DomainError(f"Expoente q deve ser > 0, recebido {q}")


def _powers(values: np.ndarray, q: float) -> np.ndarray:
    magnitudes = np.abs(values)
    if q == 1:
        return magnitudes
    return np.power(magnitudes, q)


def _chunk_size() -> int:
    return get_settings().lab.chunk_size


def _accumulate(
    terms: Callable[[int, int], np.ndarray],
    n: int,
    acc: Optional[CompensatedSum] = None,
) -> CompensatedSum:
    """Soma terms(start, stop) em blocos consecutivos de 1 até n."""
    acc = acc or CompensatedSum()
    chunk = _chunk_size()
    start = 1
    while start <= n:
        stop = min(n, start + chunk - 1)
        acc.add_array(terms(start, stop))
        start = stop + 1
    return acc


def lq_accumulator(seq: ScalarSequence, q: float, n: int) -> CompensatedSum:
    """Acumulador de Σ_{j<=n} |ξ_j|^q (expõe o limite de erro)."""
    _check_exponent(q)
    if n < 1:
        raise DomainError(f"N deve ser >= 1, recebido {n}")
    return _accumulate(lambda a, b: _powers(seq.values(a, b), q), n)


def lq_partial(seq: ScalarSequence, q: float, n: int) -> float:
    """
    Σ_{j=1}^N |ξ_j|^q, na ordem dos índices, com soma compensada.

    Exemplo:
        lq_partial(mother_ell_p_plus(1), 1.0, 4)  # 25/12
    """
    return lq_accumulator(seq, q, n).total


def lq_partial_on_block(
    seq: ScalarSequence,
    positions: Callable[[np.ndarray], np.ndarray],
    q: float,
    n: int,
) -> float:
    """
    Σ_{j=1}^N |seq(positions(j))|^q: q-soma restrita às N primeiras posições
    de um bloco (positions(j) = encode(i, j)).
    """
    _check_exponent(q)
    if n < 1:
        raise DomainError(f"N deve ser >= 1, recebido {n}")

    def terms(start: int, stop: int) -> np.ndarray:
        j = np.arange(start, stop + 1, dtype=np.int64)
        return _powers(seq.at(positions(j)), q)

    return _accumulate(terms, n).total


def sup_norm_truncated(seq: ScalarSequence, n: int) -> float:
    """max_{j<=N} |ξ_j| (norma do sup de c₀ truncada)."""
    if n < 1:
        raise DomainError(f"N deve ser >= 1, recebido {n}")
    chunk = _chunk_size()
    best = 0.0
    start = 1
    while start <= n:
        stop = min(n, start + chunk - 1)
        values = seq.values(start, stop)
        if values.size:
            best = max(best, float(np.abs(values).max()))
        start = stop + 1
    return best


# ============================================================
# Certificados de divergência
# ============================================================


def _brute_force(
    seq: ScalarSequence, q: float, budget: int, threshold: float
) -> Tuple[CompensatedSum, Optional[DivergenceCertificate]]:
    """Soma até budget, parando no primeiro índice em que a soma excede threshold."""
    acc = CompensatedSum()
    chunk = _chunk_size()
    start = 1
    while start <= budget:
        stop = min(budget, start + chunk - 1)
        terms = _powers(seq.values(start, stop), q)
        running = acc.total + np.cumsum(terms)
        hits = np.nonzero(running > threshold)[0]
        if hits.size:
            k = int(hits[0])
            # Confirma com soma compensada e avança se o cumsum errou por arredondamento
            while k < terms.size:
                exact = acc.copy()
                exact.add_array(terms[: k + 1])
                if exact.total > threshold:
                    return exact, DivergenceCertificate(
                        threshold=threshold,
                        crossing_index=start + k,
                        partial=exact.total,
                        method="partial_sum",
                    )
                k += 1
        acc.add_array(terms)
        start = stop + 1
    return acc, None


def condensation_certificate(
    seq: ScalarSequence,
    q: float,
    threshold: float,
    max_exponent: Optional[int] = None,
) -> Optional[DivergenceCertificate]:
    """
    Limite inferior por condensação de Cauchy.

    Para termos a_j = |ξ_j|^q não crescentes a partir de m:
        Σ_{j<=2^K} a_j >= Σ_{j<=2^{k0-1}} a_j + Σ_{k=k0}^{K} 2^{k-1}·a_{2^k}
    com 2^{k0-1} + 1 >= m. Devolve o primeiro 2^K em que o limite excede
    threshold, ou None se K ultrapassar max_exponent.
    """
    _check_exponent(q)
    if seq.tail_monotone_from is None:
        return None
    max_exponent = max_exponent or get_settings().lab.condensation_max_exponent

    k0 = 1
    while 2 ** (k0 - 1) + 1 < seq.tail_monotone_from:
        k0 += 1
    base_end = 2 ** (k0 - 1)
    acc = lq_accumulator(seq, q, base_end)

    exponents = np.arange(k0, max_exponent + 1)
    indices = np.power(2.0, exponents.astype(np.float64))
    small = indices < _INT_INDEX_LIMIT
    values = np.empty(indices.size, dtype=np.float64)
    if small.any():
        values[small] = seq.at(indices[small].astype(np.int64))
    if (~small).any():
        values[~small] = seq.at(indices[~small])
    weighted = np.power(2.0, (exponents - 1).astype(np.float64)) * _powers(values, q)

    for k, term in zip(exponents, weighted):
        acc.add(float(term))
        if acc.total > threshold:
            return DivergenceCertificate(
                threshold=threshold,
                crossing_index=2 ** int(k),
                partial=acc.total,
                method="condensation",
                notes={"condensation_exponent": int(k), "condensation_start": int(k0)},
            )
    return None


def has_l1_certificate(seq: ScalarSequence) -> bool:
    """ξ ∈ ℓ₁ certificado: suporte finito ou envelope com cauda finita em q = 1."""
    if seq.is_finitely_supported:
        return True
    envelope = get_envelope_registry().for_sequence(seq)
    if envelope is None or seq.tail_monotone_from is None:
        return False
    return not envelope.diverges(seq, 1.0)


def classify(seq: ScalarSequence, q: float, policy: Optional[NormPolicy] = None) -> ConvergenceVerdict:
    """
    Classifica Σ|ξ_j|^q.

    Ordem de decisão:
        1. suporte finito -> Converged exato (resto 0)
        2. soma por força bruta cruza o limiar -> DivergenceCertificate
        3. envelope registrado com cauda finita -> Converged
        4. envelope divergente e cauda monótona -> condensação
        5. caso contrário -> Undecided
    """
    _check_exponent(q)
    policy = policy or NormPolicy()

    if seq.support_end is not None:
        end = max(seq.support_end, 1)
        acc = lq_accumulator(seq, q, end)
        return Converged(value=acc.total, remainder_bound=0.0, at_index=end, error_bound=acc.error_bound)

    acc, certificate = _brute_force(seq, q, policy.budget, policy.divergence_threshold)
    if certificate is not None:
        logger.debug(
            "Divergência certificada por soma parcial",
            sequence=seq.label,
            q=q,
            crossing_index=certificate.crossing_index,
        )
        return certificate

    partial = acc.total
    envelope = get_envelope_registry().for_sequence(seq)
    if envelope is None or seq.tail_monotone_from is None:
        return Undecided(budget=policy.budget, partial=partial, reason="sem envelope de cauda registrado")

    upper = envelope.upper(seq, q, policy.budget)
    if math.isfinite(upper):
        return Converged(
            value=partial,
            remainder_bound=upper,
            at_index=policy.budget,
            remainder_lower=envelope.lower(seq, q, policy.budget),
            error_bound=acc.error_bound,
            meets_tolerance=upper <= policy.tolerance * partial,
        )

    certificate = condensation_certificate(seq, q, policy.divergence_threshold)
    if certificate is not None:
        logger.debug(
            "Divergência certificada por condensação",
            sequence=seq.label,
            q=q,
            exponent=certificate.notes.get("condensation_exponent"),
        )
        return certificate

    logger.warning("Classificação indecisa", sequence=seq.label, q=q, budget=policy.budget)
    return Undecided(budget=policy.budget, partial=partial, reason="limiar não atingido")


def recheck_certificate(
    seq: ScalarSequence, q: float, certificate: DivergenceCertificate, rel_tol: float = 1e-9
) -> bool:
    """
    Rechecagem independente por soma simples (sem compensação).

    Confere que a soma recomputada concorda com certificate.partial até
    rel_tol e excede o limiar.
    """
    if certificate.method == "partial_sum":
        total = 0.0
        chunk = _chunk_size()
        start = 1
        while start <= certificate.crossing_index:
            stop = min(certificate.crossing_index, start + chunk - 1)
            total += plain_total(_powers(seq.values(start, stop), q))
            start = stop + 1
    else:
        k0 = int(certificate.notes["condensation_start"])
        k_end = int(certificate.notes["condensation_exponent"])
        total = plain_total(_powers(seq.values(1, 2 ** (k0 - 1)), q))
        for k in range(k0, k_end + 1):
            index = 2**k
            value = seq.eval(index) if index < _INT_INDEX_LIMIT else float(seq.at(np.array([float(index)]))[0])
            total += 2.0 ** (k - 1) * abs(value) ** q
    agrees = abs(total - certificate.partial) <= rel_tol * abs(certificate.partial)
    return agrees and total > certificate.threshold


# ============================================================
# Decaimento em c₀
# ============================================================


def _magnitude(seq: ScalarSequence, j: int) -> float:
    if j < _INT_INDEX_LIMIT:
        return abs(seq.eval(j))
    return abs(float(seq.at(np.array([float(j)]))[0]))


def c0_decay_check(
    seq: ScalarSequence,
    epsilon: float,
    scan_budget: Optional[int] = None,
    max_exponent: Optional[int] = None,
) -> int:
    """
    Menor índice J >= tail_monotone_from com |ξ_J| < ε.

    Pela monotonicidade da cauda, todos os termos posteriores também
    ficam abaixo de ε. Varre linearmente até scan_budget índices e, se
    necessário, faz busca exponencial (índices 2^k) seguida de bisseção
    em inteiros. Para índices muito grandes, "menor" é relativo à
    avaliação em float64.

    Raises:
        DomainError: sem cauda monótona ou ε <= 0
        CertificateNotFoundError: nenhum índice até 2^max_exponent
    """
    if seq.tail_monotone_from is None:
        raise DomainError(f"{seq.label} não declara cauda monótona")
    if not epsilon > 0:
        raise DomainError(f"ε deve ser > 0, recebido {epsilon}")
    scan_budget = scan_budget or get_settings().lab.chunk_size
    max_exponent = max_exponent or get_settings().lab.condensation_max_exponent

    m = seq.tail_monotone_from
    values = np.abs(seq.values(m, m + scan_budget - 1))
    below = np.nonzero(values < epsilon)[0]
    if below.size:
        return m + int(below[0])

    low = m + scan_budget - 1  # |ξ_low| >= ε
    exponent = max(low.bit_length(), 1)
    high = None
    while exponent <= max_exponent:
        candidate = 2**exponent
        if _magnitude(seq, candidate) < epsilon:
            high = candidate
            break
        low = candidate
        exponent += 1
    if high is None:
        raise CertificateNotFoundError(
            f"Nenhum índice com |ξ_J| < {epsilon} até 2^{max_exponent}",
            budget=max_exponent,
        )

    # Invariante: |ξ_low| >= ε > |ξ_high|
    while high - low > 1:
        middle = (low + high) // 2
        if _magnitude(seq, middle) < epsilon:
            high = middle
        else:
            low = middle
    return high

