"""
Espaços componentes X_n e a família de isomorfos uniformes R_n: X → X_n.

Modelo de mesa:
    X = ℝ^d (d = model_dim) e X_n = ℝ^{d_n}, d_n >= d, com a mesma norma
    (ℓ₁, ℓ₂ ou sup). R_n(w) = c_n · (w, 0, ..., 0), com c_n = 2^{e_n} e
    |e_n| <= ⌊log₂ δ⌋, sorteado por um hash determinístico de (seed, n).

Como c_n é potência de dois, R_n⁻¹(R_n(w)) = w é exato em ponto flutuante
e δ⁻¹‖w‖ <= ‖R_n(w)‖ <= δ‖w‖ vale sem arredondamento.
"""

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from src.config.logging import get_logger
from src.utils.errors import DomainError

logger = get_logger(__name__)

NormTag = Literal["l1", "l2", "sup"]

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX_1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX_2 = np.uint64(0x94D049BB133111EB)


def _mix(seed: int, ns: np.ndarray) -> np.ndarray:
    """Hash SplitMix64 de (seed, n), vetorizado em n."""
    z = np.asarray(ns, dtype=np.uint64) * _GOLDEN + np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    z = (z ^ (z >> np.uint64(30))) * _MIX_1
    z = (z ^ (z >> np.uint64(27))) * _MIX_2
    return z ^ (z >> np.uint64(31))


def vector_norm(vectors: np.ndarray, tag: NormTag) -> np.ndarray:
    """Norma de cada linha (ou do vetor, se 1-D)."""
    magnitudes = np.abs(vectors)
    if tag == "l1":
        return magnitudes.sum(axis=-1)
    if tag == "l2":
        return np.sqrt((magnitudes**2).sum(axis=-1))
    if tag == "sup":
        return magnitudes.max(axis=-1)
    raise DomainError(f"Norma desconhecida: {tag}")


@dataclass(frozen=True)
class ComponentSpaceFamily:
    """
    Dimensões d_n dos componentes X_n.

    No caso homogêneo, d_n = model_dim (X_n = X). No heterogêneo,
    d_n = model_dim + (hash(n) mod (extra_dims + 1)).
    """

    model_dim: int = 8
    extra_dims: int = 0
    heterogeneous: bool = False
    norm: NormTag = "l1"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.model_dim < 1:
            raise DomainError(f"model_dim deve ser >= 1, recebido {self.model_dim}")
        if self.extra_dims < 0:
            raise DomainError(f"extra_dims deve ser >= 0, recebido {self.extra_dims}")

    def dim(self, n: int) -> int:
        if n < 1:
            raise DomainError(f"Índice deve ser >= 1, recebido {n}")
        if not self.heterogeneous or self.extra_dims == 0:
            return self.model_dim
        extra = int(_mix(self.seed + 1, np.array([n]))[0] % np.uint64(self.extra_dims + 1))
        return self.model_dim + extra

    def norm_of(self, vectors: np.ndarray) -> np.ndarray:
        return vector_norm(vectors, self.norm)


@dataclass(frozen=True)
class IsomorphFamily:
    """
    Isomorfos R_n com ‖R_n‖ <= δ e ‖R_n⁻¹‖ <= δ.

    Exemplo:
        fam = IsomorphFamily(delta=2.0, seed=7)
        v = fam.forward(5, w)
        fam.backward(5, v)  # == w, bit a bit
    """

    delta: float = 1.0
    seed: int = 0
    components: ComponentSpaceFamily = field(default_factory=ComponentSpaceFamily)

    def __post_init__(self) -> None:
        if not self.delta >= 1:
            raise DomainError(f"δ deve ser >= 1, recebido {self.delta}")

    @property
    def model_dim(self) -> int:
        return self.components.model_dim

    @property
    def max_exponent(self) -> int:
        return int(math.floor(math.log2(self.delta)))

    def scales(self, ns: np.ndarray) -> np.ndarray:
        """c_n = 2^{e_n} para cada n (vetorizado)."""
        ns = np.asarray(ns, dtype=np.int64)
        if ns.size and ns.min() < 1:
            raise DomainError("Índices devem ser >= 1")
        span = self.max_exponent
        if span == 0:
            return np.ones(ns.shape, dtype=np.float64)
        exponents = (_mix(self.seed, ns) % np.uint64(2 * span + 1)).astype(np.int32) - span
        return np.ldexp(1.0, exponents)

    def scale(self, n: int) -> float:
        return float(self.scales(np.array([n]))[0])

    def _check_model(self, w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=np.float64)
        if w.shape != (self.model_dim,):
            raise DomainError(f"Vetor do modelo deve ter dimensão {self.model_dim}, recebido {w.shape}")
        return w

    def forward(self, n: int, w: np.ndarray) -> np.ndarray:
        """R_n(w) ∈ X_n."""
        w = self._check_model(w)
        out = np.zeros(self.components.dim(n), dtype=np.float64)
        out[: self.model_dim] = self.scale(n) * w
        return out

    def backward(self, n: int, v: np.ndarray) -> np.ndarray:
        """R_n⁻¹ na imagem de R_n."""
        v = np.asarray(v, dtype=np.float64)
        return v[: self.model_dim] / self.scale(n)

    def norm(self, w: np.ndarray) -> float:
        return float(self.components.norm_of(np.asarray(w, dtype=np.float64)))

    def sandwich_holds(self, n: int, w: np.ndarray) -> bool:
        """δ⁻¹‖w‖ <= ‖R_n(w)‖ <= δ‖w‖."""
        base = self.norm(w)
        image = self.norm(self.forward(n, w))
        return base / self.delta <= image <= self.delta * base
