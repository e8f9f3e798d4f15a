"""
Espalhamento pelo vetor-mãe: y_i, x ⊗ w e o operador T.

Este módulo implementa:
- tilde_s: expoente s̃ do espaço de partida ℓ_{s̃}(X)
- make_y: y_i = Σ_j ξ_j e_{i_j} (ξ copiado no bloco ℕᵢ)
- x ⊗ w = (x_n R_n(w))_n e as identidades de bilinearidade
- T((w_i)) = Σ_i y_i ⊗ w_i, coordenada a coordenada
- Estimativa de norma ‖y_j ⊗ w_j‖_p <= δ‖w_j‖‖ξ‖_p e sua agregação em s̃
"""

import math
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from src.config.logging import get_logger
from src.norms.engine import BoundCheck, bound_check, lq_partial, lq_partial_on_block
from src.norms.summation import CompensatedSum
from src.partition.schemes import PartitionScheme
from src.sequences.lazy import ScalarSequence
from src.spread.isomorphs import IsomorphFamily
from src.utils.errors import DomainError

logger = get_logger(__name__)


def tilde_s(p: float) -> float:
    """s̃ = 1 se p >= 1, s̃ = p se 0 < p < 1."""
    if not p > 0:
        raise DomainError(f"p deve ser > 0, recebido {p}")
    return 1.0 if p >= 1 else p


def make_y(i: int, xi: ScalarSequence, scheme: PartitionScheme) -> ScalarSequence:
    """
    Cópia de ξ no bloco ℕᵢ: coordenada n vale ξ_j se decode(n) = (i, j), senão 0.

    Exemplo:
        make_y(1, xi, dyadic_partition()).eval(3)  # ξ_2
    """
    if i < 1:
        raise DomainError(f"Bloco deve ser >= 1, recebido {i}")

    def generator(idx: np.ndarray) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        blocks, positions = scheme.decode_many(idx)
        out = np.zeros(idx.shape, dtype=np.float64)
        inside = blocks == i
        out[inside] = xi.generator(positions[inside])
        return out

    return ScalarSequence(generator=generator, label=f"y_{i}[{xi.label}]", params={"block": i})


def block_positions_map(scheme: PartitionScheme, i: int):
    """j ↦ encode(i, j), vetorizado (posições do bloco i)."""

    def positions(j: np.ndarray) -> np.ndarray:
        j = np.asarray(j, dtype=np.int64)
        return scheme.encode_many(np.full_like(j, i), j)

    return positions


def spread_norm_identity(xi: ScalarSequence, scheme: PartitionScheme, i: int, r: float, n: int) -> bool:
    """q-soma de y_i nas N primeiras posições do bloco == q-soma de ξ até N, bit a bit."""
    y = make_y(i, xi, scheme)
    return lq_partial_on_block(y, block_positions_map(scheme, i), r, n) == lq_partial(xi, r, n)


# ============================================================
# Tensor x ⊗ w
# ============================================================


@dataclass(frozen=True, eq=False)
class TensorSequence:
    """x ⊗ w: coordenada n igual a x_n · R_n(w)."""

    x: ScalarSequence
    w: np.ndarray
    family: IsomorphFamily

    def coord(self, n: int) -> np.ndarray:
        return tensor_coord(self.x, self.w, self.family, n)


def tensor_coord(x: ScalarSequence, w: np.ndarray, fam: IsomorphFamily, n: int) -> np.ndarray:
    """x_n · R_n(w)."""
    return x.eval(n) * fam.forward(n, w)


def bilinearity_holds(
    x1: ScalarSequence,
    x2: ScalarSequence,
    w1: np.ndarray,
    w2: np.ndarray,
    lam: float,
    fam: IsomorphFamily,
    n: int,
) -> bool:
    """
    Identidades da bilinearidade na coordenada n, comparadas sem tolerância:

        (x1 + x2) ⊗ w1 = x1 ⊗ w1 + x2 ⊗ w1
        x1 ⊗ (w1 + w2) = x1 ⊗ w1 + x1 ⊗ w2
        λ(x1 ⊗ w1) = (λx1) ⊗ w1 = x1 ⊗ (λw1)
    """
    w1 = np.asarray(w1, dtype=np.float64)
    w2 = np.asarray(w2, dtype=np.float64)
    sum_x = x1.eval(n) + x2.eval(n)
    left_additive = sum_x * fam.forward(n, w1)
    right_additive = tensor_coord(x1, w1 + w2, fam, n)
    base = tensor_coord(x1, w1, fam, n)
    checks = [
        np.array_equal(left_additive, base + tensor_coord(x2, w1, fam, n)),
        np.array_equal(right_additive, base + tensor_coord(x1, w2, fam, n)),
        np.array_equal(lam * base, (lam * x1.eval(n)) * fam.forward(n, w1)),
        np.array_equal(lam * base, tensor_coord(x1, lam * w1, fam, n)),
    ]
    return all(checks)


# ============================================================
# Operador T
# ============================================================


def T_coord(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    w_list: Sequence[np.ndarray],
    n: int,
) -> np.ndarray:
    """
    Coordenada n de T((w_i)): ξ_j · R_n(w_i) com decode(n) = (i, j); zero se i > len(w_list).
    """
    if n < 1:
        raise DomainError(f"Índice deve ser >= 1, recebido {n}")
    i, j = scheme.decode(n)
    if i > len(w_list):
        return np.zeros(fam.components.dim(n), dtype=np.float64)
    return xi.eval(j) * fam.forward(n, np.asarray(w_list[i - 1], dtype=np.float64))


def T_coord_direct_sum(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    w_list: Sequence[np.ndarray],
    n: int,
) -> np.ndarray:
    """Σ_i (y_i ⊗ w_i)_n somando todos os termos, inclusive os nulos."""
    total = np.zeros(fam.components.dim(n), dtype=np.float64)
    for i, w in enumerate(w_list, start=1):
        y = make_y(i, xi, scheme)
        total = total + tensor_coord(y, np.asarray(w, dtype=np.float64), fam, n)
    return total


def slot_norms(fam: IsomorphFamily, w_list: Sequence[np.ndarray]) -> np.ndarray:
    """‖w_i‖_X para cada slot."""
    if not w_list:
        return np.zeros(0, dtype=np.float64)
    return fam.components.norm_of(np.asarray([np.asarray(w, dtype=np.float64) for w in w_list]))


def block_component_norms(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    w: np.ndarray,
    block: int,
    start: int,
    stop: int,
) -> np.ndarray:
    """‖(y_block ⊗ w)_{block_k}‖ = |ξ_k| · c_{block_k} · ‖w‖ para k em [start, stop]."""
    positions = scheme.block_positions(block, start, stop)
    return np.abs(xi.values(start, stop)) * fam.scales(positions) * fam.norm(w)


@dataclass(frozen=True)
class TensorNormReport:
    """Estimativas por termo e agregada (em s̃) de ‖y_j ⊗ w_j‖_p."""

    per_term: List[BoundCheck]
    aggregate: BoundCheck

    @property
    def holds(self) -> bool:
        return self.aggregate.holds and all(check.holds for check in self.per_term)


def T_norm_bound_check(
    xi: ScalarSequence,
    scheme: PartitionScheme,
    fam: IsomorphFamily,
    w_list: Sequence[np.ndarray],
    p: float,
    n: int,
    tolerance: float = 1e-12,
) -> TensorNormReport:
    """
    Verifica, truncando cada bloco em N posições:

        ‖y_j ⊗ w_j‖_p <= δ‖w_j‖_X · ‖ξ‖_p
        Σ_j ‖y_j ⊗ w_j‖_p^{s̃} <= δ^{s̃} ‖ξ‖_p^{s̃} · Σ_j ‖w_j‖_X^{s̃}
    """
    if not p > 0:
        raise DomainError(f"p deve ser > 0, recebido {p}")
    s = tilde_s(p)
    xi_norm = lq_partial(xi, p, n) ** (1.0 / p)
    norms = slot_norms(fam, w_list)

    per_term: List[BoundCheck] = []
    lhs_total = CompensatedSum()
    for j, w in enumerate(w_list, start=1):
        component = block_component_norms(xi, scheme, fam, np.asarray(w, dtype=np.float64), j, 1, n)
        acc = CompensatedSum()
        acc.add_array(component**p)
        lhs = acc.total ** (1.0 / p)
        per_term.append(bound_check(lhs, fam.delta * float(norms[j - 1]) * xi_norm, tolerance))
        lhs_total.add(lhs**s)

    rhs_total = CompensatedSum()
    rhs_total.add_array(norms**s)
    aggregate = bound_check(lhs_total.total, fam.delta**s * xi_norm**s * rhs_total.total, tolerance)
    return TensorNormReport(per_term=per_term, aggregate=aggregate)


def first_nonzero_slot(fam: IsomorphFamily, w_list: Sequence[np.ndarray]) -> int:
    """Índice (a partir de 1) do primeiro w_m ≠ 0, ou 0 se todos são nulos."""
    for m, norm in enumerate(slot_norms(fam, w_list), start=1):
        if norm > 0 and math.isfinite(norm):
            return m
    return 0
