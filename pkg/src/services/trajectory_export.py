"""
Exportação da trajetória de uma coordenada da testemunha de Peano.
"""

from pathlib import Path
from typing import Optional

import pandas as pd

from src.config.logging import get_logger
from src.models.scenario import Scenario, ScenarioKind
from src.partition.schemes import get_scheme
from src.peano.witness import witness_trajectory
from src.sequences.lazy import finite_sequence
from src.utils.errors import ScenarioError

logger = get_logger(__name__)

TRAJECTORY_COLUMNS = ["t", "u", "bound"]


def trajectory_frame(scenario: Scenario, j: int) -> pd.DataFrame:
    """
    Trajetória da coordenada m_j (bloco do primeiro a_m ≠ 0) como DataFrame.

    Colunas: t, u (valor RK4) e bound (limite inferior da explosão).

    Raises:
        ScenarioError: cenário não é do tipo peano
    """
    if scenario.kind != ScenarioKind.PEANO:
        raise ScenarioError(f"Trajetórias só existem para cenários peano, recebido {scenario.kind.value}")

    section = scenario.peano
    trajectory = witness_trajectory(
        finite_sequence(section.coefficients, label="a"),
        get_scheme(scenario.partition.scheme),
        j,
        t_star=section.t0 + section.horizon,
        t0=section.t0,
        y0=section.y0,
        step=section.step,
    )
    return pd.DataFrame(
        {"t": trajectory.times, "u": trajectory.values, "bound": trajectory.bound},
        columns=TRAJECTORY_COLUMNS,
    )


def emit_trajectory(scenario: Scenario, j: int, path: Optional[Path] = None) -> pd.DataFrame:
    """Grava o CSV (t,u,bound) quando path é informado e devolve o DataFrame."""
    frame = trajectory_frame(scenario, j)
    if path is not None:
        frame.to_csv(path, index=False, float_format="%.17g")
        logger.info("Trajetória exportada", path=str(path), j=j, rows=len(frame))
    return frame
