"""
Certificados sobre a imagem de T.

Este módulo implementa:
- range_divergence_certificate: z = T(w) ∉ (Σ X_n)_q pelo bloco do
  primeiro w_m ≠ 0, com cadeia ‖z_{m_k}‖ >= δ⁻¹‖w_m‖|ξ_k|
- divergence_chain_check: a cadeia verificada termo a termo
- plus_space_cauchy_check: norma de cada degrau p_k do espaço ℓ_p⁺
- range_independence_check, identify_slot_vector, range_decay_check
- strict_inclusion_check: ℓ_p ⊊ ℓ_p⁺ ⊊ ℓ_q
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from src.config.logging import get_logger
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
    lq_partial,
)
from src.norms.summation import CompensatedSum
from src.partition.schemes import PartitionScheme
from src.peano.witness import RankCheck
from src.sequences.lazy import ScalarSequence, mother_ell_p_plus, power_sequence
from src.spread.isomorphs import IsomorphFamily
from src.spread.tensor import (
    T_coord,
    block_component_norms,
    first_nonzero_slot,
    slot_norms,
)
from src.utils.errors import DomainError, WitnessRejectedError

logger = get_logger(__name__)


def _require_slot(fam: IsomorphFamily, w_list: Sequence[np.ndarray]) -> int:
    m = first_nonzero_slot(fam, w_list)
    if m == 0:
        raise WitnessRejectedError("Todos os w_i são nulos: z = 0 pertence ao subespaço")
    return m


def _chain_factor(fam: IsomorphFamily, w: np.ndarray, q: float) -> float:
    """δ^{-q}·‖w‖^q."""
    return fam.delta ** (-q) * fam.norm(w) ** q


# ============================================================
# Divergência na imagem
# ============================================================


def range_divergence_certificate(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    w_list: Sequence[np.ndarray],
    q: float,
    policy: Optional[NormPolicy] = None,
) -> ConvergenceVerdict:
    """
    Classifica Σ_n ‖z_n‖^q para z = T(w).

    Divergência é certificada no bloco m do primeiro w_m ≠ 0 contra o
    limiar efetivo threshold·δ^{-q}‖w_m‖^q: primeiro por soma direta das
    normas do bloco; se o orçamento não basta, pela cadeia
    Σ_k ‖z_{m_k}‖^q >= δ^{-q}‖w_m‖^q Σ_k |ξ_k|^q aplicada a um
    certificado de ξ (método "condensation_chain"). Quando ξ converge em q,
    devolve Converged para z com resto δ^q Σ‖w_i‖^q · R_ξ(N).

    Raises:
        WitnessRejectedError: todos os w_i nulos
    """
    if not q > 0:
        raise DomainError(f"q deve ser > 0, recebido {q}")
    policy = policy or NormPolicy()
    m = _require_slot(fam, w_list)
    w_m = np.asarray(w_list[m - 1], dtype=np.float64)
    factor = _chain_factor(fam, w_m, q)
    effective = policy.divergence_threshold * factor

    acc = CompensatedSum()
    chunk = 2**16
    start = 1
    while start <= policy.budget:
        stop = min(policy.budget, start + chunk - 1)
        terms = block_component_norms(xi, scheme, fam, w_m, m, start, stop) ** q
        running = acc.total + np.cumsum(terms)
        hits = np.nonzero(running > effective)[0]
        if hits.size:
            k = int(hits[0])
            exact = acc.copy()
            exact.add_array(terms[: k + 1])
            if exact.total > effective:
                logger.debug("Divergência na imagem por soma direta", block=m, q=q, crossing=start + k)
                return DivergenceCertificate(
                    threshold=effective,
                    crossing_index=start + k,
                    partial=exact.total,
                    method="partial_sum",
                    notes={"block": m, "chain_factor": factor},
                )
        acc.add_array(terms)
        start = stop + 1

    verdict = classify(xi, q, policy)
    if isinstance(verdict, DivergenceCertificate):
        return DivergenceCertificate(
            threshold=effective,
            crossing_index=verdict.crossing_index,
            partial=factor * verdict.partial,
            method="condensation_chain",
            notes={"block": m, "chain_factor": factor, "mother_partial": verdict.partial},
        )
    if isinstance(verdict, Converged):
        norms = slot_norms(fam, w_list)
        total = CompensatedSum()
        for i, w in enumerate(w_list, start=1):
            if norms[i - 1] > 0:
                component = block_component_norms(
                    xi, scheme, fam, np.asarray(w, dtype=np.float64), i, 1, verdict.at_index
                )
                total.add_array(component**q)
        scale = fam.delta**q * float((norms**q).sum())
        return Converged(
            value=total.total,
            remainder_bound=scale * verdict.remainder_bound,
            at_index=verdict.at_index,
            error_bound=total.error_bound,
            meets_tolerance=verdict.meets_tolerance,
        )
    return Undecided(budget=policy.budget, partial=acc.total, reason=verdict.reason)


def divergence_chain_check(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    w_list: Sequence[np.ndarray],
    q: float,
    n: int,
    tolerance: float = 1e-12,
) -> BoundCheck:
    """
    partial_z(N) >= δ^{-q}‖w_m‖^q · lq_partial(ξ, q, N), com verificação
    termo a termo ‖z_{m_k}‖^q >= δ^{-q}‖w_m‖^q |ξ_k|^q.
    """
    m = _require_slot(fam, w_list)
    w_m = np.asarray(w_list[m - 1], dtype=np.float64)
    factor = _chain_factor(fam, w_m, q)
    terms = block_component_norms(xi, scheme, fam, w_m, m, 1, n) ** q
    floor = factor * np.abs(xi.values(1, n)) ** q
    termwise = bool(np.all(terms >= floor * (1 - tolerance)))

    acc = CompensatedSum()
    acc.add_array(terms)
    check = bound_check(factor * lq_partial(xi, q, n), acc.total, tolerance)
    return BoundCheck(lhs=check.lhs, rhs=check.rhs, holds=check.holds and termwise)


# ============================================================
# Espaço ℓ_p⁺
# ============================================================


@dataclass(frozen=True)
class PlusSpaceLadder:
    """Degraus p_k = p + 1/k, k = 1..K, com p_k ↓ p."""

    p: float
    rungs: int = 6

    def __post_init__(self) -> None:
        if self.p < 1:
            raise DomainError(f"p deve ser >= 1 para ℓ_p⁺, recebido {self.p}")
        if self.rungs < 1:
            raise DomainError(f"Número de degraus deve ser >= 1, recebido {self.rungs}")

    @property
    def exponents(self) -> List[float]:
        return [self.p + 1.0 / k for k in range(1, self.rungs + 1)]


@dataclass(frozen=True)
class RungResult:
    """Estimativa e caudas de Cauchy em um degrau."""

    exponent: float
    partial_sum_bound: BoundCheck
    tail_differences: List[float]
    tail_bounds: List[float]

    @property
    def cauchy_holds(self) -> bool:
        bounded = all(
            math.isfinite(b) and d <= b * (1 + 1e-12) for d, b in zip(self.tail_differences, self.tail_bounds)
        )
        shrinking = all(b2 <= b1 for b1, b2 in zip(self.tail_bounds, self.tail_bounds[1:]))
        return bounded and shrinking

    @property
    def holds(self) -> bool:
        return self.partial_sum_bound.holds and self.cauchy_holds


@dataclass(frozen=True)
class PlusSpaceReport:
    rungs: List[RungResult]
    rung_independent: bool
    divergence: Optional[ConvergenceVerdict]

    @property
    def holds(self) -> bool:
        return (
            all(r.holds for r in self.rungs)
            and self.rung_independent
            and (self.divergence is None or isinstance(self.divergence, DivergenceCertificate))
        )


def plus_space_cauchy_check(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    w_list: Sequence[np.ndarray],
    ladder: PlusSpaceLadder,
    truncations: Sequence[int],
    policy: Optional[NormPolicy] = None,
    sample: int = 16,
) -> PlusSpaceReport:
    """
    Para cada degrau q = p_k:
        - Σ_{j<=n} ‖y_j ⊗ w_j‖_q <= δ‖ξ‖_q Σ_j ‖w_j‖ (ξ truncado em N)
        - ‖z^{(N_{t+1})} − z^{(N_t)}‖_q <= δ (Σ‖w_j‖^q)^{1/q} R_ξ(N_t)^{1/q},
          com limites decrescentes em t
    As coordenadas amostradas de z são as mesmas em todos os degraus, e
    a divergência em q = p é certificada por range_divergence_certificate.
    """
    if not w_list:
        return PlusSpaceReport(rungs=[], rung_independent=True, divergence=None)
    truncations = sorted(set(truncations))
    if not truncations or truncations[0] < 1:
        raise DomainError("Truncamentos devem ser >= 1")
    policy = policy or NormPolicy()

    norms = slot_norms(fam, w_list)
    l1_mass = float(norms.sum())
    largest = truncations[-1]
    sampled = [scheme.encode(i, j) for i in range(1, len(w_list) + 1) for j in range(1, sample + 1)]

    results: List[RungResult] = []
    coordinates: List[np.ndarray] = []
    for q in ladder.exponents:
        xi_norm = lq_partial(xi, q, largest) ** (1.0 / q)
        lhs = CompensatedSum()
        for i, w in enumerate(w_list, start=1):
            component = block_component_norms(xi, scheme, fam, np.asarray(w, dtype=np.float64), i, 1, largest)
            acc = CompensatedSum()
            acc.add_array(component**q)
            lhs.add(acc.total ** (1.0 / q))
        bound = bound_check(lhs.total, fam.delta * xi_norm * l1_mass)

        verdict = classify(xi, q, policy.model_copy(update={"budget": truncations[0]}))
        differences: List[float] = []
        tail_bounds: List[float] = []
        power_mass = float((norms**q).sum())
        for low, high in zip(truncations, truncations[1:]):
            acc = CompensatedSum()
            for i, w in enumerate(w_list, start=1):
                component = block_component_norms(
                    xi, scheme, fam, np.asarray(w, dtype=np.float64), i, low + 1, high
                )
                acc.add_array(component**q)
            differences.append(acc.total ** (1.0 / q))
            envelope = classify(xi, q, policy.model_copy(update={"budget": low}))
            remainder = envelope.remainder_bound if isinstance(envelope, Converged) else float("inf")
            tail_bounds.append(fam.delta * power_mass ** (1.0 / q) * remainder ** (1.0 / q))

        if not isinstance(verdict, Converged):
            tail_bounds = [float("inf")] * len(differences)
        results.append(
            RungResult(exponent=q, partial_sum_bound=bound, tail_differences=differences, tail_bounds=tail_bounds)
        )
        coordinates.append(np.concatenate([T_coord(xi, scheme, fam, w_list, n) for n in sampled]))

    independent = all(np.array_equal(coordinates[0], c) for c in coordinates[1:])
    divergence = range_divergence_certificate(xi, scheme, fam, w_list, ladder.p, policy)
    logger.info(
        "Degraus de ℓ_p⁺ verificados",
        p=ladder.p,
        rungs=len(results),
        rung_independent=independent,
        divergence=divergence.kind,
    )
    return PlusSpaceReport(rungs=results, rung_independent=independent, divergence=divergence)


# ============================================================
# Injetividade e identificação
# ============================================================


def range_independence_check(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    basis_w: Sequence[np.ndarray],
) -> RankCheck:
    """
    M[k, l] = ‖T(e_l ⊗ basis_w[l])_{n_k}‖ com n_k = encode(k, 1).

    Slots distintos vivem em blocos disjuntos: M é diagonal e o posto
    conta os w_l não nulos.
    """
    size = len(basis_w)
    if size < 1:
        raise DomainError("É preciso ao menos um vetor")
    matrix = np.zeros((size, size), dtype=np.float64)
    zero = np.zeros(fam.model_dim, dtype=np.float64)
    for col, w in enumerate(basis_w):
        single = [zero] * size
        single[col] = np.asarray(w, dtype=np.float64)
        for row in range(size):
            n = scheme.encode(row + 1, 1)
            matrix[row, col] = fam.components.norm_of(T_coord(xi, scheme, fam, single, n))
    diagonal = bool(np.count_nonzero(matrix - np.diag(np.diag(matrix))) == 0)
    return RankCheck(rank=int(np.linalg.matrix_rank(matrix)), size=size, diagonal=diagonal)


@dataclass(frozen=True)
class SlotIdentification:
    """α_m recuperado de z_r e a concordância nas posições amostradas."""

    block: int
    recovered: np.ndarray
    max_error: float
    holds: bool


def identify_slot_vector(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    w_list: Sequence[np.ndarray],
    r: int,
    sample: Sequence[int] = tuple(range(1, 17)),
    rel_tol: float = 1e-14,
) -> SlotIdentification:
    """
    Com decode(r) = (m, t): α_m = R_r⁻¹(z_r) / ξ_t; confere
    z_{m_j} = ξ_j R_{m_j}(α_m) nas posições j amostradas e α_m ≈ w_m.
    """
    m, t = scheme.decode(r)
    if m > len(w_list):
        raise DomainError(f"Coordenada {r} cai no bloco {m}, fora dos {len(w_list)} slots")
    xi_t = xi.eval(t)
    if xi_t == 0:
        raise DomainError(f"ξ_{t} = 0: coordenada {r} não identifica o slot")
    recovered = fam.backward(r, T_coord(xi, scheme, fam, w_list, r)) / xi_t

    scale = max(fam.norm(recovered), 1e-300)
    error = float(np.abs(recovered - np.asarray(w_list[m - 1], dtype=np.float64)).max()) / scale
    for j in sample:
        n = scheme.encode(m, j)
        expected = xi.eval(j) * fam.forward(n, recovered)
        actual = T_coord(xi, scheme, fam, w_list, n)
        reference = max(float(np.abs(actual).max()), 1e-300)
        error = max(error, float(np.abs(actual - expected).max()) / reference)
    return SlotIdentification(block=m, recovered=recovered, max_error=error, holds=error <= rel_tol)


# ============================================================
# Caso p = 0: sequências nulas
# ============================================================


@dataclass(frozen=True)
class RangeDecay:
    """
    Índices de decaimento por slot: para k >= decay_index[i],
    ‖z_{i_k}‖ <= δ‖w_i‖|ξ_k| < ε.
    """

    epsilon: float
    decay_index: Dict[int, int] = field(default_factory=dict)
    exceptional_count: int = 0
    largest_exceptional: int = 0
    sampled_holds: bool = True
    sup_norm: float = 0.0


def range_decay_check(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    w_list: Sequence[np.ndarray],
    epsilon: float,
    sample: int = 256,
) -> RangeDecay:
    """
    Certifica z = T(w) ∈ (Σ X_n)_0: o conjunto {n : ‖z_n‖ >= ε} é finito.

    Usa a cauda monótona de ξ com ε_i = ε/(δ‖w_i‖) por slot e confere as
    normas reais de z nas sample posições seguintes ao índice encontrado.
    """
    if not epsilon > 0:
        raise DomainError(f"ε deve ser > 0, recebido {epsilon}")
    norms = slot_norms(fam, w_list)
    decay: Dict[int, int] = {}
    sampled_ok = True
    count = 0
    largest = 0
    sup = 0.0
    for i, w in enumerate(w_list, start=1):
        if norms[i - 1] == 0:
            continue
        w = np.asarray(w, dtype=np.float64)
        index = c0_decay_check(xi, epsilon / (fam.delta * float(norms[i - 1])))
        decay[i] = index
        count += index - 1
        if index > 1:
            largest = max(largest, scheme.encode(i, index - 1))
        # encode vetorizado em int64: só amostra enquanto a maior posição cabe
        if scheme.encode(i, index + sample) < 2**62:
            after = block_component_norms(xi, scheme, fam, w, i, index, index + sample - 1)
            sampled_ok = sampled_ok and bool((after < epsilon).all())
        head = block_component_norms(xi, scheme, fam, w, i, 1, min(index, sample))
        sup = max(sup, float(head.max()))
    return RangeDecay(
        epsilon=epsilon,
        decay_index=decay,
        exceptional_count=count,
        largest_exceptional=largest,
        sampled_holds=sampled_ok,
        sup_norm=sup,
    )


# ============================================================
# Inclusões estritas ℓ_p ⊊ ℓ_p⁺ ⊊ ℓ_q
# ============================================================


@dataclass(frozen=True)
class StrictInclusionResult:
    """Veredictos das duas testemunhas de inclusão estrita."""

    p: float
    q: float
    lower_divergence: ConvergenceVerdict
    lower_rungs: List[ConvergenceVerdict]
    upper_convergence: ConvergenceVerdict
    upper_divergence: ConvergenceVerdict
    upper_exponent: float

    @property
    def holds(self) -> bool:
        return (
            isinstance(self.lower_divergence, DivergenceCertificate)
            and all(isinstance(v, Converged) for v in self.lower_rungs)
            and isinstance(self.upper_convergence, Converged)
            and isinstance(self.upper_divergence, DivergenceCertificate)
        )


def strict_inclusion_check(
    p: float, q: float, policy: Optional[NormPolicy] = None, rungs: int = 6
) -> StrictInclusionResult:
    """
    1 <= p < q:
        - ξ_j = j^{-1/p} ∈ ℓ_p⁺ − ℓ_p: diverge em p, converge em cada p + 1/k
        - η_j = j^{-1/r}, r = (p+q)/2: converge em q e diverge em (p + r)/2 > p,
          logo η ∈ ℓ_q − ℓ_p⁺
    """
    if not 1 <= p < q:
        raise DomainError(f"Exige 1 <= p < q, recebido p={p}, q={q}")
    policy = policy or NormPolicy()
    lower = mother_ell_p_plus(p)
    r = (p + q) / 2.0
    upper = power_sequence(r)
    between = (p + r) / 2.0
    return StrictInclusionResult(
        p=p,
        q=q,
        lower_divergence=classify(lower, p, policy),
        lower_rungs=[classify(lower, s, policy) for s in PlusSpaceLadder(p, rungs).exponents],
        upper_convergence=classify(upper, q, policy),
        upper_divergence=classify(upper, between, policy),
        upper_exponent=between,
    )
