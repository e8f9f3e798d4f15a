"""
Serviços do laboratório.

Orquestram as verificações de um cenário e a exportação de trajetórias.
"""

from src.services.suite_runner import SuiteRunner, get_suite_runner
from src.services.trajectory_export import TRAJECTORY_COLUMNS, emit_trajectory, trajectory_frame

__all__ = [
    "SuiteRunner",
    "get_suite_runner",
    "TRAJECTORY_COLUMNS",
    "emit_trajectory",
    "trajectory_frame",
]
