"""
Sequências reais infinitas definidas por fórmula.

Este módulo implementa:
- ScalarSequence: mapa total j >= 1 -> real, avaliado de forma vetorizada
- Biblioteca de vetores-mãe (ℓ_p, c₀, ℓ_p⁺) e sequências auxiliares
- Combinação linear ponto a ponto

Convenções:
    Índices começam em 1. O gerador recebe um array numpy de índices
    positivos (int64, ou float64 para índices além de 2^62) e devolve
    float64 do mesmo formato. Toda avaliação, escalar ou em lote, passa
    pelo mesmo gerador: o mesmo índice produz sempre os mesmos bits.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from src.utils.errors import DomainError

Generator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class ScalarSequence:
    """
    Sequência real indexada por j >= 1.

    Atributos:
        generator: função pura vetorizada (índices -> valores)
        label: descrição legível
        tail_monotone_from: índice m a partir do qual |ξ_j| é não crescente
        family: chave do envelope de cauda registrado (norms.envelopes)
        params: parâmetros da fórmula (lidos pelo envelope)
        support_end: último índice possivelmente não nulo (suporte finito)
    """

    generator: Generator
    label: str
    tail_monotone_from: Optional[int] = None
    family: Optional[str] = None
    params: Dict[str, float] = field(default_factory=dict)
    support_end: Optional[int] = None

    def eval(self, j: int) -> float:
        """Valor ξ_j para um índice j >= 1."""
        if j < 1:
            raise DomainError(f"Índice deve ser >= 1, recebido {j}")
        index = np.array([j], dtype=np.int64 if j < 2**62 else np.float64)
        return float(self.generator(index)[0])

    def at(self, indices: np.ndarray) -> np.ndarray:
        """Valores em um array de índices (todos >= 1)."""
        indices = np.asarray(indices)
        if indices.size and indices.min() < 1:
            raise DomainError("Índices devem ser >= 1")
        return np.asarray(self.generator(indices), dtype=np.float64)

    def values(self, start: int, stop: int) -> np.ndarray:
        """Valores ξ_start, ..., ξ_stop (intervalo fechado)."""
        if start < 1:
            raise DomainError(f"Índice inicial deve ser >= 1, recebido {start}")
        if stop < start:
            return np.zeros(0, dtype=np.float64)
        return self.at(np.arange(start, stop + 1, dtype=np.int64))

    @property
    def is_finitely_supported(self) -> bool:
        return self.support_end is not None


def _as_float(indices: np.ndarray) -> np.ndarray:
    return np.asarray(indices, dtype=np.float64)


# ============================================================
# Sequências elementares
# ============================================================


def zero_sequence() -> ScalarSequence:
    """Sequência identicamente nula."""
    return ScalarSequence(
        generator=lambda idx: np.zeros(np.shape(idx), dtype=np.float64),
        label="0",
        tail_monotone_from=1,
        support_end=0,
    )


def unit_vector(n: int) -> ScalarSequence:
    """Vetor canônico e_n (indicadora do índice n)."""
    if n < 1:
        raise DomainError(f"Índice do vetor canônico deve ser >= 1, recebido {n}")

    def generator(idx: np.ndarray) -> np.ndarray:
        return (np.asarray(idx) == n).astype(np.float64)

    return ScalarSequence(
        generator=generator,
        label=f"e_{n}",
        tail_monotone_from=n,
        support_end=n,
    )


def finite_sequence(values: Sequence[float], label: Optional[str] = None) -> ScalarSequence:
    """
    Sequência de suporte finito (a_1, ..., a_k, 0, 0, ...).

    Usada para coeficientes (a_i) ∈ ℓ₁ com certificado trivial.
    """
    table = np.asarray(list(values), dtype=np.float64)
    table.setflags(write=False)
    size = int(table.size)

    def generator(idx: np.ndarray) -> np.ndarray:
        idx = np.asarray(idx)
        out = np.zeros(idx.shape, dtype=np.float64)
        mask = idx <= size
        out[mask] = table[idx[mask].astype(np.int64) - 1]
        return out

    # Zeros após o suporte: cauda trivialmente não crescente
    return ScalarSequence(
        generator=generator,
        label=label or f"finite({', '.join(f'{v:g}' for v in table)})",
        tail_monotone_from=max(size, 1),
        support_end=size,
    )


def geometric_sequence(ratio: float, scale: float = 1.0) -> ScalarSequence:
    """Sequência geométrica scale·ratio^j, com 0 < ratio < 1 (em ℓ₁)."""
    if not 0 < ratio < 1:
        raise DomainError(f"Razão geométrica deve estar em (0, 1), recebida {ratio}")

    def generator(idx: np.ndarray) -> np.ndarray:
        return scale * np.power(ratio, _as_float(idx))

    return ScalarSequence(
        generator=generator,
        label=f"{scale:g}·{ratio:g}^j",
        tail_monotone_from=1,
        family="geometric",
        params={"ratio": ratio, "scale": scale},
    )


def power_sequence(r: float) -> ScalarSequence:
    """ξ_j = j^{-1/r}: pertence a ℓ_q exatamente para q > r."""
    if r <= 0:
        raise DomainError(f"Expoente deve ser > 0, recebido {r}")
    exponent = -1.0 / r

    def generator(idx: np.ndarray) -> np.ndarray:
        return np.power(_as_float(idx), exponent)

    return ScalarSequence(
        generator=generator,
        label=f"j^(-1/{r:g})",
        tail_monotone_from=1,
        family="power",
        params={"r": r},
    )


# ============================================================
# Vetores-mãe
# ============================================================


def mother_ell_p(p: float) -> ScalarSequence:
    """
    Vetor-mãe em ℓ_p − ⋃_{0<q<p} ℓ_q.

    ξ_j = (j · log²(j+1))^{-1/p}. A soma Σ|ξ_j|^p converge pelo teste da
    integral; para q < p os termos dominam 1/j a partir de algum índice.
    """
    if p <= 0:
        raise DomainError(f"p deve ser > 0, recebido {p}")
    exponent = -1.0 / p

    def generator(idx: np.ndarray) -> np.ndarray:
        j = _as_float(idx)
        return np.power(j * np.log1p(j) ** 2, exponent)

    return ScalarSequence(
        generator=generator,
        label=f"mother_ell_p(p={p:g})",
        tail_monotone_from=1,
        family="ell_p",
        params={"p": p},
    )


def mother_c0() -> ScalarSequence:
    """Vetor-mãe em c₀ − ⋃_{p>0} ℓ_p: ξ_j = 1/log(j+1)."""

    def generator(idx: np.ndarray) -> np.ndarray:
        return 1.0 / np.log1p(_as_float(idx))

    return ScalarSequence(
        generator=generator,
        label="mother_c0",
        tail_monotone_from=1,
        family="c0",
    )


def mother_ell_p_plus(p: float) -> ScalarSequence:
    """Vetor-mãe em ℓ_p⁺ − ℓ_p (p >= 1): ξ_j = j^{-1/p}."""
    if p < 1:
        raise DomainError(f"p deve ser >= 1 para ℓ_p⁺, recebido {p}")
    base = power_sequence(p)
    return ScalarSequence(
        generator=base.generator,
        label=f"mother_ell_p_plus(p={p:g})",
        tail_monotone_from=1,
        family="power",
        params={"r": p},
    )


MOTHER_VECTORS = ("ell_p", "c0", "ell_p_plus")


def mother_vector(tag: str, p: Optional[float] = None) -> ScalarSequence:
    """Resolve um vetor-mãe pela etiqueta usada nos cenários."""
    if tag == "ell_p":
        if p is None:
            raise DomainError("mother_ell_p exige p")
        return mother_ell_p(p)
    if tag == "c0":
        return mother_c0()
    if tag == "ell_p_plus":
        if p is None:
            raise DomainError("mother_ell_p_plus exige p")
        return mother_ell_p_plus(p)
    raise DomainError(f"Vetor-mãe desconhecido: {tag}")


# ============================================================
# Operações de espaço vetorial
# ============================================================


def lin_comb(terms: Sequence[Tuple[float, ScalarSequence]]) -> ScalarSequence:
    """
    Combinação linear ponto a ponto Σ c_k · ξ^(k).

    Lista vazia devolve a sequência nula. O resultado não herda
    monotonicidade de cauda; o suporte é finito se todos os termos o forem.
    """
    if not terms:
        return zero_sequence()

    coefficients = [float(c) for c, _ in terms]
    sequences = [seq for _, seq in terms]

    def generator(idx: np.ndarray) -> np.ndarray:
        out = np.zeros(np.shape(idx), dtype=np.float64)
        for coefficient, seq in zip(coefficients, sequences):
            out = out + coefficient * seq.generator(idx)
        return out

    supports = [seq.support_end for seq in sequences]
    support_end = max(supports) if all(s is not None for s in supports) else None  # type: ignore[type-var]

    return ScalarSequence(
        generator=generator,
        label=" + ".join(f"{c:g}·{seq.label}" for c, seq in zip(coefficients, sequences)),
        support_end=support_end,
    )
