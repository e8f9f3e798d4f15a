"""
Problema de Cauchy escalar u' = λ(√|u| + γ), u(t0) = y0.

Este módulo implementa:
- Runge-Kutta clássico de 4ª ordem, vetorizado sobre uma família de
  problemas desacoplados (uma coordenada por problema)
- Oráculo analítico pela primitiva de 1/(√u + γ)
- Verificação da desigualdade ∫_α^β dx/(√|x|+γ) <= 2(√|α| + √|β|)

Inversão temporal: com passo −h e λ negativo, cada estágio do RK4 produz
exatamente os mesmos bits da execução direta com h e |λ| (as negações
são exatas em ponto flutuante).
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.config.logging import get_logger
from src.norms.engine import BoundCheck, bound_check
from src.utils.errors import DomainError, UnsupportedPathError

logger = get_logger(__name__)

# Refinamento perto de u = 0, onde √u não é Lipschitz:
# enquanto |u| < _SMOOTH_RATIO·γ², o passo reescalado |λ|h/γ fica <= _MAX_SCALED_STEP
_SMOOTH_RATIO = 100.0
_MAX_SCALED_STEP = 1e-3
_MAX_SUBSTEPS = 4096


@dataclass(frozen=True)
class ScalarCauchyProblem:
    """u'(t) = λ(√|u(t)| + γ), u(t0) = y0, com γ > 0."""

    lam: float
    gamma: float
    t0: float = 0.0
    y0: float = 0.0

    def __post_init__(self) -> None:
        if not self.gamma > 0:
            raise DomainError(f"γ deve ser > 0, recebido {self.gamma}")

    def lower_bound(self, t: np.ndarray) -> np.ndarray:
        """(|λ|·|t − t0|/2 − √|y0|)₊², limite inferior de |u(t)|."""
        elapsed = np.abs(np.asarray(t, dtype=np.float64) - self.t0)
        return np.maximum(abs(self.lam) * elapsed / 2.0 - math.sqrt(abs(self.y0)), 0.0) ** 2


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Amostras (t, u(t)) de uma integração e o limite inferior em cada t."""

    problem: ScalarCauchyProblem
    times: np.ndarray
    values: np.ndarray
    reversed_time: bool = False

    @property
    def final_time(self) -> float:
        return float(self.times[-1])

    @property
    def final_value(self) -> float:
        return float(self.values[-1])

    @property
    def bound(self) -> np.ndarray:
        return self.problem.lower_bound(self.times)

    def blowup_margin(self) -> float:
        """min_t (√|u(t)| + √|y0| − |λ|·|t − t0|/2); >= 0 pela desigualdade integral."""
        elapsed = np.abs(self.times - self.problem.t0)
        margin = np.sqrt(np.abs(self.values)) + math.sqrt(abs(self.problem.y0)) - abs(self.problem.lam) * elapsed / 2.0
        return float(margin.min())


# ============================================================
# RK4
# ============================================================


def _rhs(u: np.ndarray, lam: np.ndarray, gamma: np.ndarray) -> np.ndarray:
    return lam * (np.sqrt(np.abs(u)) + gamma)


def _rk4_step(u: np.ndarray, lam: np.ndarray, gamma: np.ndarray, h: float) -> np.ndarray:
    half = h / 2.0
    k1 = _rhs(u, lam, gamma)
    k2 = _rhs(u + half * k1, lam, gamma)
    k3 = _rhs(u + half * k2, lam, gamma)
    k4 = _rhs(u + h * k3, lam, gamma)
    return u + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0


def _substeps(u: np.ndarray, lam: np.ndarray, gamma: np.ndarray, h: float) -> int:
    """Micro-passos do próximo passo; 1 longe de u = 0."""
    near_zero = np.abs(u) < _SMOOTH_RATIO * gamma**2
    if not near_zero.any():
        return 1
    scaled = float((np.abs(lam[near_zero]) * abs(h) / gamma[near_zero]).max())
    return int(min(_MAX_SUBSTEPS, max(1, math.ceil(scaled / _MAX_SCALED_STEP))))


def integrate_family(
    lam: np.ndarray,
    gamma: np.ndarray,
    y0: np.ndarray,
    t0: float,
    step: float,
    duration: float,
    reverse: bool = False,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Integra simultaneamente k problemas desacoplados por RK4.

    O intervalo [t0, t0 + duration] (ou [t0 − duration, t0] com
    reverse=True) é dividido em n passos iguais de tamanho <= step, que
    formam a grade de saída. Enquanto alguma coordenada está perto de
    u = 0 (|u| < 100·γ²), cada passo é repartido em micro-passos iguais
    com |λ|·h/γ <= 10⁻³, no máximo 4096. A repartição só depende de |u|,
    |λ| e |h|, então a execução invertida repete a mesma.

    Returns:
        Tupla (times[n+1], values[n+1, k])
    """
    if not step > 0:
        raise DomainError(f"Passo deve ser > 0, recebido {step}")
    if not duration > 0:
        raise DomainError(f"Horizonte deve ser > 0, recebido {duration}")

    lam = np.atleast_1d(np.asarray(lam, dtype=np.float64))
    gamma = np.atleast_1d(np.asarray(gamma, dtype=np.float64))
    u = np.atleast_1d(np.asarray(y0, dtype=np.float64)).copy()
    lam, gamma, u = np.broadcast_arrays(lam, gamma, u)
    u = u.copy()
    if (gamma <= 0).any():
        raise DomainError("Todos os γ devem ser > 0")

    n_steps = max(1, math.ceil(duration / step - 1e-9))
    h = duration / n_steps
    if reverse:
        h = -h

    values = np.empty((n_steps + 1, u.size), dtype=np.float64)
    values[0] = u
    for k in range(1, n_steps + 1):
        count = _substeps(u, lam, gamma, h)
        if count == 1:
            u = _rk4_step(u, lam, gamma, h)
        else:
            micro = h / count
            for _ in range(count):
                u = _rk4_step(u, lam, gamma, micro)
        values[k] = u

    times = t0 + h * np.arange(n_steps + 1, dtype=np.float64)
    return times, values


def integrate_scalar(problem: ScalarCauchyProblem, step: float, t_end: float) -> Trajectory:
    """
    Trajetória RK4 de um único problema de t0 até t_end.

    Exemplo:
        integrate_scalar(ScalarCauchyProblem(lam=1.0, gamma=0.25), 1e-3, 4.0).final_value  # >= 4
    """
    if not step > 0:
        raise DomainError(f"Passo deve ser > 0, recebido {step}")
    if not t_end > problem.t0:
        raise DomainError(f"t_end deve ser > t0 ({t_end} <= {problem.t0})")
    times, values = integrate_family(
        np.array([problem.lam]), np.array([problem.gamma]), np.array([problem.y0]), problem.t0, step, t_end - problem.t0
    )
    return Trajectory(problem=problem, times=times, values=values[:, 0])


def integrate_reversed(problem: ScalarCauchyProblem, step: float, duration: float) -> Trajectory:
    """Execução com tempo invertido, de t0 até t0 − duration (v(t) = u(−t))."""
    times, values = integrate_family(
        np.array([problem.lam]),
        np.array([problem.gamma]),
        np.array([problem.y0]),
        problem.t0,
        step,
        duration,
        reverse=True,
    )
    return Trajectory(problem=problem, times=times, values=values[:, 0], reversed_time=True)


# ============================================================
# Oráculo analítico
# ============================================================


def antiderivative(u: float, gamma: float) -> float:
    """F(u) = 2√u − 2γ·ln(√u + γ), com F'(u) = 1/(√u + γ) para u >= 0."""
    root = math.sqrt(u)
    return 2.0 * root - 2.0 * gamma * math.log(root + gamma)


def analytic_time(problem: ScalarCauchyProblem, u_target: float) -> float:
    """
    Instante em que a solução exata atinge u_target.

    t = t0 + (F(u_target) − F(y0)) / λ, válido com y0 e u_target >= 0.

    Raises:
        DomainError: λ = 0
        UnsupportedPathError: caminho fora do ramo u >= 0
    """
    if problem.lam == 0:
        raise DomainError("λ = 0: a solução é constante e não atinge outro valor")
    if problem.y0 < 0 or u_target < 0:
        raise UnsupportedPathError(
            f"Caminho de {problem.y0} a {u_target} sai do ramo u >= 0"
        )
    if u_target == problem.y0:
        return problem.t0
    elapsed = (antiderivative(u_target, problem.gamma) - antiderivative(problem.y0, problem.gamma)) / problem.lam
    return problem.t0 + elapsed


def _signed_primitive(x: float, gamma: float) -> float:
    """G(x) = sign(x)·(F(|x|) − F(0)), primitiva de 1/(√|x| + γ) em ℝ."""
    magnitude = antiderivative(abs(x), gamma) - antiderivative(0.0, gamma)
    return math.copysign(magnitude, x) if x != 0 else 0.0


def dieudonne_integral_check(alpha: float, beta: float, gamma: float, tolerance: float = 1e-12) -> BoundCheck:
    """
    |∫_α^β dx/(√|x| + γ)| <= 2(√|α| + √|β|), em forma fechada nos dois ramos de sinal.

    Exemplo:
        dieudonne_integral_check(0.0, 4.0, 0.25).holds  # True
    """
    if not gamma > 0:
        raise DomainError(f"γ deve ser > 0, recebido {gamma}")
    lhs = abs(_signed_primitive(beta, gamma) - _signed_primitive(alpha, gamma))
    rhs = 2.0 * (math.sqrt(abs(alpha)) + math.sqrt(abs(beta)))
    return bound_check(lhs, rhs, tolerance)


def crossing_time(trajectory: Trajectory, u_target: float) -> Optional[float]:
    """Primeiro instante amostrado com |u| >= u_target, interpolado linearmente."""
    magnitudes = np.abs(trajectory.values)
    hits = np.nonzero(magnitudes >= u_target)[0]
    if not hits.size:
        return None
    k = int(hits[0])
    if k == 0:
        return float(trajectory.times[0])
    u_a, u_b = magnitudes[k - 1], magnitudes[k]
    t_a, t_b = trajectory.times[k - 1], trajectory.times[k]
    return float(t_a + (u_target - u_a) * (t_b - t_a) / (u_b - u_a))
