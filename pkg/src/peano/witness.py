"""
Testemunhas de falha de Peano para campos L(a) não nulos.

Para o primeiro a_m ≠ 0, toda solução de u' = L(a)(u) com u(t0) = y0
satisfaz, na coordenada m_j (j-ésima posição do bloco m), o problema
escalar desacoplado

    u'_{m_j} = a_m (√|u_{m_j}| + 1/(m_j + 1)),

e portanto |u_{m_j}(t*)| >= (|a_m|(t* − t0)/2 − √|y0|)₊² para todo j.
Um limite positivo uniforme em j contradiz (u_{m_j}(t*))_j ∈ c₀.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.config.logging import get_logger
from src.peano.fields import TruncatedPoint, combined_eval, dieudonne_coord, spread_coord
from src.peano.ode import ScalarCauchyProblem, Trajectory, integrate_family
from src.partition.schemes import PartitionScheme
from src.sequences.lazy import ScalarSequence
from src.utils.errors import DomainError, WitnessRejectedError

logger = get_logger(__name__)

# Janela de busca do primeiro coeficiente não nulo quando a não tem suporte finito
_DEFAULT_COEFFICIENT_SCAN = 1024


@dataclass(frozen=True)
class BlowupWitness:
    """
    Resultado da testemunha de explosão em um bloco.

    Atributos:
        block: bloco m do primeiro coeficiente não nulo
        coefficient: a_m (o λ dos problemas escalares)
        horizon: t*
        positions: coordenadas m_j amostradas
        bound_values: |u_{m_j}(t*)| por j amostrado
        lower_bound: (|a_m|(t* − t0)/2 − √|y0|)₊²
        uniform_bound: c = min_j |u_{m_j}(t*)|
        reversed_time: True quando a_m < 0 (execução v(t) = u(−t))
        tolerance: folga aceita contra o limite inferior
    """

    block: int
    coefficient: float
    horizon: float
    positions: Tuple[int, ...]
    bound_values: Tuple[float, ...]
    lower_bound: float
    uniform_bound: float
    reversed_time: bool
    tolerance: float

    @property
    def holds(self) -> bool:
        return self.uniform_bound > 0 and self.uniform_bound >= self.lower_bound - self.tolerance

    @property
    def spread(self) -> float:
        """Variação de |u_{m_j}(t*)| entre os j amostrados."""
        return max(self.bound_values) - min(self.bound_values)


def first_nonzero_coefficient(a: ScalarSequence, scan: Optional[int] = None) -> Tuple[int, float]:
    """
    Primeiro (m, a_m) com a_m ≠ 0.

    Raises:
        WitnessRejectedError: nenhum coeficiente não nulo no alcance
    """
    limit = a.support_end if a.support_end is not None else (scan or _DEFAULT_COEFFICIENT_SCAN)
    values = a.values(1, limit) if limit >= 1 else np.zeros(0)
    nonzero = np.nonzero(values)[0]
    if not nonzero.size:
        raise WitnessRejectedError(f"Campo L({a.label}) é nulo: não há testemunha")
    m = int(nonzero[0]) + 1
    return m, float(values[m - 1])


def _block_problems(scheme: PartitionScheme, block: int, block_sample: Sequence[int]) -> Tuple[List[int], np.ndarray]:
    positions = [scheme.encode(block, j) for j in block_sample]
    gammas = 1.0 / (np.asarray(positions, dtype=np.float64) + 1.0)
    return positions, gammas


def peano_failure_witness(
    a: ScalarSequence,
    scheme: PartitionScheme,
    block_sample: Sequence[int],
    t_star: float,
    t0: float = 0.0,
    y0: float = 0.0,
    step: float = 1e-4,
    tolerance: float = 1e-3,
    n_trunc: Optional[int] = None,
) -> BlowupWitness:
    """
    Integra os problemas escalares do bloco m e devolve a cota uniforme c.

    Com a_m < 0 a integração corre no tempo invertido (passo negativo),
    que produz os mesmos valores da execução com |a_m|.

    Exemplo:
        witness = peano_failure_witness(unit_vector(1), dyadic_partition(), range(1, 65), t_star=4.0)
        witness.uniform_bound  # >= 4 − 1e-3
    """
    if not t_star > t0:
        raise DomainError(f"t* deve ser > t0 ({t_star} <= {t0})")
    if not block_sample:
        raise DomainError("Amostra de posições do bloco vazia")

    block, coefficient = first_nonzero_coefficient(a, n_trunc)
    positions, gammas = _block_problems(scheme, block, block_sample)
    reverse = coefficient < 0
    duration = t_star - t0

    _, values = integrate_family(
        np.full(gammas.size, coefficient), gammas, np.full(gammas.size, y0), t0, step, duration, reverse=reverse
    )
    finals = np.abs(values[-1])
    problem = ScalarCauchyProblem(lam=coefficient, gamma=float(gammas[0]), t0=t0, y0=y0)
    lower = float(problem.lower_bound(np.array([t0 + duration]))[0])

    witness = BlowupWitness(
        block=block,
        coefficient=coefficient,
        horizon=t_star,
        positions=tuple(positions),
        bound_values=tuple(float(v) for v in finals),
        lower_bound=lower,
        uniform_bound=float(finals.min()),
        reversed_time=reverse,
        tolerance=tolerance,
    )
    logger.info(
        "Testemunha de explosão calculada",
        block=block,
        coefficient=coefficient,
        samples=len(positions),
        uniform_bound=witness.uniform_bound,
        lower_bound=lower,
        reversed_time=reverse,
    )
    return witness


def witness_trajectory(
    a: ScalarSequence,
    scheme: PartitionScheme,
    j: int,
    t_star: float,
    t0: float = 0.0,
    y0: float = 0.0,
    step: float = 1e-4,
    n_trunc: Optional[int] = None,
) -> Trajectory:
    """Trajetória completa da coordenada m_j usada pela testemunha."""
    if j < 1:
        raise DomainError(f"Posição do bloco deve ser >= 1, recebida {j}")
    if not t_star > t0:
        raise DomainError(f"t* deve ser > t0 ({t_star} <= {t0})")
    block, coefficient = first_nonzero_coefficient(a, n_trunc)
    _, gammas = _block_problems(scheme, block, [j])
    problem = ScalarCauchyProblem(lam=coefficient, gamma=float(gammas[0]), t0=t0, y0=y0)
    reverse = coefficient < 0
    times, values = integrate_family(
        np.array([coefficient]), gammas, np.array([y0]), t0, step, t_star - t0, reverse=reverse
    )
    return Trajectory(problem=problem, times=times, values=values[:, 0], reversed_time=reverse)


# ============================================================
# Identificação de coordenadas e independência
# ============================================================


@dataclass(frozen=True)
class CoefficientIdentification:
    """a_r recuperado de h = L(a) e o maior resíduo nas coordenadas amostradas."""

    block: int
    recovered: float
    expected: float
    max_residual: float
    holds: bool


def identify_coefficient(
    a: ScalarSequence,
    scheme: PartitionScheme,
    r: int,
    x0: TruncatedPoint,
    sample: Sequence[Tuple[int, TruncatedPoint]],
    rel_tol: float = 1e-15,
) -> CoefficientIdentification:
    """
    Recupera a_r = h_n(x0)/f_n(x0), n = primeira posição do bloco r, e confere
    h_{r_j}(x) = a_r f_{r_j}(x) para cada (j, x) amostrado.
    """
    n = scheme.encode(r, 1)
    recovered = combined_eval(a, scheme, n, x0) / dieudonne_coord(n, x0)

    residual = 0.0
    for j, x in sample:
        position = scheme.encode(r, j)
        f_value = dieudonne_coord(position, x)
        gap = abs(combined_eval(a, scheme, position, x) - recovered * f_value)
        residual = max(residual, gap / max(abs(recovered * f_value), 1e-300))

    expected = a.eval(r)
    holds = abs(recovered - expected) <= rel_tol * abs(expected) and residual <= rel_tol
    return CoefficientIdentification(
        block=r, recovered=recovered, expected=expected, max_residual=residual, holds=holds
    )


@dataclass(frozen=True)
class RankCheck:
    """Posto da matriz de avaliação k×k e se ela é diagonal."""

    rank: int
    size: int
    diagonal: bool

    @property
    def full_rank(self) -> bool:
        return self.rank == self.size


def spread_independence_check(blocks: Sequence[int], scheme: PartitionScheme, x: TruncatedPoint) -> RankCheck:
    """
    Matriz M[k, l] = (ℕ_{blocks[l]}f)(x) na primeira coordenada do bloco blocks[k].

    Blocos distintos têm suportes disjuntos: M é diagonal com entradas
    f_n(x) >= 1/(n+1) > 0, logo de posto k.
    """
    if len(set(blocks)) != len(blocks):
        raise DomainError("Blocos devem ser distintos")
    size = len(blocks)
    matrix = np.zeros((size, size), dtype=np.float64)
    for row, block_row in enumerate(blocks):
        n = scheme.encode(block_row, 1)
        for col, block_col in enumerate(blocks):
            matrix[row, col] = spread_coord(block_col, scheme, n, x)
    diagonal = bool(np.count_nonzero(matrix - np.diag(np.diag(matrix))) == 0)
    rank = int(np.linalg.matrix_rank(matrix)) if size else 0
    return RankCheck(rank=rank, size=size, diagonal=diagonal)
