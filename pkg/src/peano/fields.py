"""
Campos vetoriais coordenada a coordenada em c₀.

Este módulo implementa:
- TruncatedPoint: ponto (x_1, ..., x_N, 0, 0, ...) de c₀
- Campo de Dieudonné f_n(x) = √|x_n| + 1/(n+1)
- Campos espalhados ℕᵢf e combinados L(a) = Σ a_i ℕᵢf
- As duas estimativas ℓ₁ (limitação e transferência de Lipschitz)

Como os blocos ℕᵢ são disjuntos, a soma infinita de L(a) colapsa em um
único termo por coordenada: L(a)_n = a_i · f_n(x), com decode(n) = (i, j).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence

import numpy as np

from src.config.logging import get_logger
from src.norms.engine import BoundCheck, bound_check, has_l1_certificate
from src.norms.summation import CompensatedSum
from src.partition.schemes import PartitionScheme, dyadic_partition
from src.sequences.lazy import ScalarSequence
from src.utils.errors import DomainError, MissingCertificateError

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class TruncatedPoint:
    """
    Ponto de c₀ com suporte em {1, ..., N}.

    Exemplo:
        x = TruncatedPoint.of([0.0, 0.0, 4.0])
        x.coord(3)   # 4.0
        x.coord(10)  # 0.0
    """

    coords: np.ndarray

    @classmethod
    def of(cls, values: Sequence[float]) -> "TruncatedPoint":
        coords = np.asarray(list(values), dtype=np.float64)
        coords.setflags(write=False)
        return cls(coords=coords)

    @classmethod
    def zeros(cls, length: int = 0) -> "TruncatedPoint":
        return cls.of([0.0] * length)

    @classmethod
    def unit(cls, n: int) -> "TruncatedPoint":
        """Vetor canônico e_n como ponto de c₀."""
        if n < 1:
            raise DomainError(f"Índice deve ser >= 1, recebido {n}")
        values = [0.0] * n
        values[n - 1] = 1.0
        return cls.of(values)

    @property
    def length(self) -> int:
        return int(self.coords.size)

    @property
    def sup_norm(self) -> float:
        return float(np.abs(self.coords).max()) if self.coords.size else 0.0

    def coord(self, n: int) -> float:
        """x_n, com x_n = 0 além do truncamento."""
        if n < 1:
            raise DomainError(f"Índice deve ser >= 1, recebido {n}")
        return float(self.coords[n - 1]) if n <= self.length else 0.0

    def coords_at(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns, dtype=np.int64)
        out = np.zeros(ns.shape, dtype=np.float64)
        inside = ns <= self.length
        out[inside] = self.coords[ns[inside] - 1]
        return out


# ============================================================
# Coordenadas
# ============================================================


def dieudonne_many(ns: np.ndarray, x: TruncatedPoint) -> np.ndarray:
    """f_n(x) = √|x_n| + 1/(n+1), vetorizado em n."""
    ns = np.asarray(ns, dtype=np.int64)
    return np.sqrt(np.abs(x.coords_at(ns))) + 1.0 / (ns + 1.0)


def dieudonne_coord(n: int, x: TruncatedPoint) -> float:
    """
    Coordenada n do campo de Dieudonné.

    Exemplo:
        dieudonne_coord(3, TruncatedPoint.of([0, 0, 4]))  # 2.25
    """
    if n < 1:
        raise DomainError(f"Índice deve ser >= 1, recebido {n}")
    return float(dieudonne_many(np.array([n]), x)[0])


def spread_coord(i: int, scheme: PartitionScheme, n: int, x: TruncatedPoint) -> float:
    """Coordenada n de ℕᵢf: f_n(x) se n ∈ ℕᵢ, senão 0."""
    if n < 1:
        raise DomainError(f"Índice deve ser >= 1, recebido {n}")
    block, _ = scheme.decode(n)
    return dieudonne_coord(n, x) if block == i else 0.0


def _require_l1(a: ScalarSequence) -> None:
    if not has_l1_certificate(a):
        raise MissingCertificateError(f"Coeficientes {a.label} sem certificado de pertencimento a ℓ₁")


def combined_eval(a: ScalarSequence, scheme: PartitionScheme, n: int, x: TruncatedPoint) -> float:
    """
    Coordenada n de L(a) = Σ a_i ℕᵢf: a_i · f_n(x) com decode(n) = (i, j).

    Raises:
        MissingCertificateError: a sem certificado ℓ₁
    """
    _require_l1(a)
    if n < 1:
        raise DomainError(f"Índice deve ser >= 1, recebido {n}")
    block, _ = scheme.decode(n)
    return a.eval(block) * dieudonne_coord(n, x)


# ============================================================
# Campos como objetos
# ============================================================


class FieldKind(str, Enum):
    DIEUDONNE = "dieudonne"
    SPREAD = "spread"
    COMBINED = "combined"


@dataclass(frozen=True, eq=False)
class CoordinateField:
    """
    Campo coordenada a coordenada: coord(n, x) para n >= 1.

    Atributos:
        kind: Dieudonné, espalhado (bloco i) ou combinado (coeficientes a)
        coord: função (n, x) -> real
        block: bloco do campo espalhado
        coefficients: coeficientes do campo combinado
        scheme: partição usada por campos espalhados/combinados
    """

    kind: FieldKind
    coord: Callable[[int, TruncatedPoint], float]
    label: str
    block: Optional[int] = None
    coefficients: Optional[ScalarSequence] = None
    scheme: Optional[PartitionScheme] = field(default=None)

    def __call__(self, n: int, x: TruncatedPoint) -> float:
        return self.coord(n, x)

    def image(self, x: TruncatedPoint, length: int) -> np.ndarray:
        """Primeiras length coordenadas do campo em x."""
        ns = np.arange(1, length + 1, dtype=np.int64)
        values = dieudonne_many(ns, x)
        if self.kind == FieldKind.DIEUDONNE:
            return values
        blocks, _ = self.scheme.decode_many(ns)  # type: ignore[union-attr]
        if self.kind == FieldKind.SPREAD:
            return np.where(blocks == self.block, values, 0.0)
        return self.coefficients.at(blocks) * values  # type: ignore[union-attr]


def dieudonne_field() -> CoordinateField:
    return CoordinateField(kind=FieldKind.DIEUDONNE, coord=dieudonne_coord, label="f")


def spread_field(i: int, scheme: Optional[PartitionScheme] = None) -> CoordinateField:
    scheme = scheme or dyadic_partition()
    return CoordinateField(
        kind=FieldKind.SPREAD,
        coord=lambda n, x: spread_coord(i, scheme, n, x),
        label=f"N_{i}f",
        block=i,
        scheme=scheme,
    )


def combined_field(a: ScalarSequence, scheme: Optional[PartitionScheme] = None) -> CoordinateField:
    """L(a), rejeitando coeficientes sem certificado ℓ₁."""
    _require_l1(a)
    scheme = scheme or dyadic_partition()
    return CoordinateField(
        kind=FieldKind.COMBINED,
        coord=lambda n, x: combined_eval(a, scheme, n, x),
        label=f"L({a.label})",
        coefficients=a,
        scheme=scheme,
    )


# ============================================================
# Estimativas ℓ₁
# ============================================================


def _l1_mass(a: ScalarSequence, m: int) -> float:
    acc = CompensatedSum()
    acc.add_array(np.abs(a.values(1, m)))
    return acc.total


def _bound_indices(scheme: PartitionScheme, m: int, *points: TruncatedPoint) -> np.ndarray:
    """
    Índices onde os supremos das estimativas ℓ₁ são atingidos.

    Fora do suporte dos pontos, f_n = 1/(n+1) decresce em n: dentro de cada
    bloco ℕᵢ o máximo fica na primeira posição encode(i, 1), e a diferença
    f(x) − f(y) se anula. Bastam essas posições, o suporte e n = 1.
    """
    firsts = [scheme.encode(i, 1) for i in range(1, m + 1)]
    if max(firsts) >= 2**62:
        raise DomainError(f"m = {m} leva a índices além de 2^62")
    support = max([1] + [p.length for p in points])
    candidates = np.concatenate(
        [np.asarray(firsts, dtype=np.int64), np.arange(1, support + 1, dtype=np.int64)]
    )
    return np.unique(candidates)


def _evaluation_indices(
    scheme: PartitionScheme, m: int, truncation: Optional[int], *points: TruncatedPoint
) -> np.ndarray:
    if truncation is not None:
        return np.arange(1, truncation + 1, dtype=np.int64)
    return _bound_indices(scheme, m, *points)


def _block_weights(a: ScalarSequence, scheme: PartitionScheme, m: int, ns: np.ndarray) -> np.ndarray:
    """|a_i| na coordenada n ∈ ℕᵢ com i <= m; 0 nos demais blocos."""
    blocks, _ = scheme.decode_many(ns)
    inside = blocks <= m
    weights = np.zeros(ns.shape, dtype=np.float64)
    weights[inside] = np.abs(a.at(blocks[inside]))
    return weights


def l1_bound_check(
    a: ScalarSequence,
    x: TruncatedPoint,
    m: int,
    scheme: Optional[PartitionScheme] = None,
    truncation: Optional[int] = None,
    tolerance: float = 1e-12,
) -> BoundCheck:
    """
    ‖Σ_{i<=m} a_i ℕᵢf(x)‖ <= ‖f(x)‖ · Σ_{i<=m} |a_i| na norma do sup truncada.

    Exemplo:
        l1_bound_check(unit_vector(1), TruncatedPoint.zeros(), 1)  # lhs = rhs = 1/2
    """
    if m < 1:
        raise DomainError(f"m deve ser >= 1, recebido {m}")
    scheme = scheme or dyadic_partition()
    ns = _evaluation_indices(scheme, m, truncation, x)
    values = dieudonne_many(ns, x)
    weights = _block_weights(a, scheme, m, ns)
    lhs = float((weights * values).max())
    rhs = float(values.max()) * _l1_mass(a, m)
    return bound_check(lhs, rhs, tolerance)


def lipschitz_transfer_check(
    a: ScalarSequence,
    x: TruncatedPoint,
    y: TruncatedPoint,
    m: int,
    scheme: Optional[PartitionScheme] = None,
    truncation: Optional[int] = None,
    tolerance: float = 1e-12,
) -> BoundCheck:
    """‖Σ a_i ℕᵢf(x) − Σ a_i ℕᵢf(y)‖ <= ‖f(x) − f(y)‖ · Σ_{i<=m} |a_i|."""
    if m < 1:
        raise DomainError(f"m deve ser >= 1, recebido {m}")
    scheme = scheme or dyadic_partition()
    ns = _evaluation_indices(scheme, m, truncation, x, y)
    difference = np.abs(dieudonne_many(ns, x) - dieudonne_many(ns, y))
    weights = _block_weights(a, scheme, m, ns)
    lhs = float((weights * difference).max())
    rhs = float(difference.max()) * _l1_mass(a, m)
    return bound_check(lhs, rhs, tolerance)
