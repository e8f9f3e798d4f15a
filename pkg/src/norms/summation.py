"""
Soma compensada determinística.

Cada bloco de termos é somado com math.fsum (resultado corretamente
arredondado) e os resultados parciais entram em um acumulador de
Neumaier. A ordem de acumulação é sempre a ordem dos índices.
"""

import math

import numpy as np

EPSILON = float(np.finfo(np.float64).eps)


class CompensatedSum:
    """
    Acumulador de Neumaier (variante de Kahan robusta a termos grandes).

    Mantém a soma corrente e o erro de arredondamento acumulado em
    separado, além de Σ|termos| para o limite de erro reportado.

    Exemplo:
        acc = CompensatedSum()
        acc.add_array(np.array([1.0, 1e-16, -1.0]))
        acc.total  # 1e-16
    """

    __slots__ = ("_sum", "_carry", "_abs", "_chunks", "_count")

    def __init__(self) -> None:
        self._sum = 0.0
        self._carry = 0.0
        self._abs = 0.0
        self._chunks = 0
        self._count = 0

    def add(self, value: float) -> None:
        """Incorpora um único termo."""
        value = float(value)
        total = self._sum + value
        if abs(self._sum) >= abs(value):
            self._carry += (self._sum - total) + value
        else:
            self._carry += (value - total) + self._sum
        self._sum = total
        self._abs += abs(value)
        self._chunks += 1
        self._count += 1

    def add_array(self, values: np.ndarray) -> None:
        """Incorpora um bloco de termos (somado exatamente arredondado)."""
        if values.size == 0:
            return
        chunk_total = math.fsum(values.tolist())
        count = self._count + int(values.size)
        abs_total = self._abs + float(np.abs(values).sum())
        self.add(chunk_total)
        self._count = count
        self._abs = abs_total

    def merge(self, other: "CompensatedSum") -> "CompensatedSum":
        """Funde dois acumuladores de faixas disjuntas (ordem irrelevante para o limite)."""
        merged = CompensatedSum()
        merged._sum = self._sum
        merged._carry = self._carry
        merged.add(other._sum)
        merged.add(other._carry)
        merged._abs = self._abs + other._abs
        merged._chunks = self._chunks + other._chunks + 2
        merged._count = self._count + other._count
        return merged

    def copy(self) -> "CompensatedSum":
        clone = CompensatedSum()
        clone._sum = self._sum
        clone._carry = self._carry
        clone._abs = self._abs
        clone._chunks = self._chunks
        clone._count = self._count
        return clone

    @property
    def total(self) -> float:
        return self._sum + self._carry

    @property
    def count(self) -> int:
        """Número de termos incorporados."""
        return self._count

    @property
    def error_bound(self) -> float:
        """Limite superior do erro absoluto: (blocos + 1)·ε·Σ|termos|."""
        return (self._chunks + 1) * EPSILON * self._abs


def plain_total(values: np.ndarray) -> float:
    """Soma não compensada (reduction do numpy), usada para rechecagem independente."""
    return float(np.sum(values))
