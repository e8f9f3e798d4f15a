"""
Partições computáveis de ℕ em infinitos blocos infinitos disjuntos.

Cada esquema é uma bijeção ℕ ↔ ℕ×ℕ, n = encode(i, j), em que o bloco
ℕ_i = {i_1 < i_2 < ...} é enumerado por j ↦ encode(i, j) de forma
estritamente crescente.

Esquemas disponíveis:
- dyadic: n = 2^{i-1}·(2j-1)   (valuação 2-ádica)
- cantor: n = (i+j-2)(i+j-1)/2 + j   (emparelhamento de Cantor)
"""

import math
from abc import ABC, abstractmethod
from typing import Dict, List, Tuple

import numpy as np

from src.utils.errors import DomainError


def _check_index(name: str, value: int) -> None:
    if value < 1:
        raise DomainError(f"{name} deve ser >= 1, recebido {value}")


class PartitionScheme(ABC):
    """
    Classe base para esquemas de partição.

    As versões escalares usam inteiros Python (exatos, sem limite); as
    versões vetorizadas usam int64 e valem enquanto n < 2^62.
    """

    name: str = "base"

    @abstractmethod
    def encode(self, i: int, j: int) -> int:
        """Posição n do j-ésimo elemento do bloco i."""

    @abstractmethod
    def decode(self, n: int) -> Tuple[int, int]:
        """Par (bloco, posição) do índice n."""

    @abstractmethod
    def encode_many(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        """encode vetorizado (broadcast entre i e j)."""

    @abstractmethod
    def decode_many(self, n: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """decode vetorizado."""

    def block_of(self, n: int) -> int:
        return self.decode(n)[0]

    def block_positions(self, i: int, start: int, stop: int) -> np.ndarray:
        """Índices encode(i, start..stop), intervalo fechado."""
        _check_index("bloco", i)
        _check_index("posição inicial", start)
        j = np.arange(start, stop + 1, dtype=np.int64)
        return self.encode_many(np.full_like(j, i), j)


class DyadicPartition(PartitionScheme):
    """n = 2^{i-1}·(2j-1): bloco i são os n com valuação 2-ádica i-1."""

    name = "dyadic"

    def encode(self, i: int, j: int) -> int:
        _check_index("bloco", i)
        _check_index("posição", j)
        return (2 * j - 1) << (i - 1)

    def decode(self, n: int) -> Tuple[int, int]:
        _check_index("índice", n)
        valuation = (n & -n).bit_length() - 1
        odd = n >> valuation
        return valuation + 1, (odd + 1) // 2

    def encode_many(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        i = np.asarray(i, dtype=np.int64)
        j = np.asarray(j, dtype=np.int64)
        if i.size and i.max() > 62:
            raise DomainError("Bloco grande demais para a versão vetorizada (máx. 62)")
        return np.left_shift(2 * j - 1, i - 1)

    def decode_many(self, n: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        n = np.asarray(n, dtype=np.int64)
        lowest = n & -n
        # Potências de dois são exatas em float64 até 2^62
        valuation = np.rint(np.log2(lowest.astype(np.float64))).astype(np.int64)
        odd = n // lowest
        return valuation + 1, (odd + 1) // 2


class CantorPartition(PartitionScheme):
    """
    Emparelhamento de Cantor com índices a partir de 1.

    Com k = i + j - 2, n = k(k+1)/2 + j; para i fixo, n cresce com j.
    """

    name = "cantor"

    def encode(self, i: int, j: int) -> int:
        _check_index("bloco", i)
        _check_index("posição", j)
        k = i + j - 2
        return k * (k + 1) // 2 + j

    def decode(self, n: int) -> Tuple[int, int]:
        _check_index("índice", n)
        k = (math.isqrt(8 * (n - 1) + 1) - 1) // 2
        j = n - k * (k + 1) // 2
        return k + 2 - j, j

    def encode_many(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        i = np.asarray(i, dtype=np.int64)
        j = np.asarray(j, dtype=np.int64)
        k = i + j - 2
        return k * (k + 1) // 2 + j

    def decode_many(self, n: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        n = np.asarray(n, dtype=np.int64)
        m = n - 1
        k = np.floor((np.sqrt(8.0 * m.astype(np.float64) + 1.0) - 1.0) / 2.0).astype(np.int64)
        # Correção do arredondamento da raiz em float
        k = np.where(k * (k + 1) // 2 > m, k - 1, k)
        k = np.where((k + 1) * (k + 2) // 2 <= m, k + 1, k)
        j = n - k * (k + 1) // 2
        return k + 2 - j, j


_SCHEMES: Dict[str, PartitionScheme] = {
    DyadicPartition.name: DyadicPartition(),
    CantorPartition.name: CantorPartition(),
}


def dyadic_partition() -> PartitionScheme:
    """Esquema padrão (2-ádico): encode/decode O(1) sem tabelas."""
    return _SCHEMES["dyadic"]


def cantor_partition() -> PartitionScheme:
    """Esquema alternativo por emparelhamento de Cantor."""
    return _SCHEMES["cantor"]


def get_scheme(tag: str) -> PartitionScheme:
    """Resolve um esquema pela etiqueta do cenário."""
    try:
        return _SCHEMES[tag]
    except KeyError:
        raise DomainError(
            f"Esquema de partição desconhecido: {tag} (disponíveis: {', '.join(_SCHEMES)})"
        )


def available_schemes() -> List[str]:
    return list(_SCHEMES)


def block_prefix(scheme: PartitionScheme, i: int, count: int) -> List[int]:
    """
    Materializa {i_1, ..., i_count}, estritamente crescente.

    Exemplo:
        block_prefix(dyadic_partition(), 3, 3)  # [4, 12, 20]
    """
    if count < 0:
        raise DomainError(f"count deve ser >= 0, recebido {count}")
    return [scheme.encode(i, j) for j in range(1, count + 1)]


def bijection_sweep(scheme: PartitionScheme, limit: int) -> Tuple[bool, int]:
    """
    Verifica encode(decode(n)) = n e a cobertura disjunta para n <= limit.

    Returns:
        Tupla (ok, primeiro índice com falha ou 0)
    """
    n = np.arange(1, limit + 1, dtype=np.int64)
    blocks, positions = scheme.decode_many(n)
    if blocks.min() < 1 or positions.min() < 1:
        bad = int(n[(blocks < 1) | (positions < 1)][0])
        return False, bad
    roundtrip = scheme.encode_many(blocks, positions)
    mismatch = np.nonzero(roundtrip != n)[0]
    if mismatch.size:
        return False, int(n[mismatch[0]])
    return True, 0
