"""
Modelos Pydantic do relatório de certificação.

O relatório ecoa o cenário, registra cada verificação com seu status e
números, e consolida o veredito. Os campos têm nomes fixos e as
verificações são ordenadas por nome, de modo que execuções com a mesma
semente produzem o mesmo documento byte a byte.
"""

import math
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    """Status de uma verificação (e do veredito geral)."""

    CERTIFIED = "certified"
    FAILED = "failed"
    UNDECIDED = "undecided"


EXIT_CODES = {
    CheckStatus.CERTIFIED: 0,
    CheckStatus.FAILED: 1,
    CheckStatus.UNDECIDED: 2,
}
EXIT_CONFIG_ERROR = 64


def clean_number(value: Any) -> Any:
    """Converte escalares numpy e não finitos em valores JSON estáveis."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, (list, tuple, np.ndarray)):
        return [clean_number(v) for v in value]
    if isinstance(value, dict):
        return {str(k): clean_number(v) for k, v in value.items()}
    return value


class CheckRecord(BaseModel):
    """Uma verificação do conjunto."""

    name: str = Field(..., description="Nome estável da verificação")
    anchor: str = Field(..., description="Afirmação matemática verificada")
    status: CheckStatus = Field(..., description="certified | failed | undecided")
    numbers: Dict[str, Any] = Field(default_factory=dict, description="lhs/rhs/limites/índices")

    @classmethod
    def build(cls, name: str, anchor: str, status: CheckStatus, **numbers: Any) -> "CheckRecord":
        return cls(name=name, anchor=anchor, status=status, numbers=clean_number(numbers))


def overall_verdict(checks: List[CheckRecord]) -> CheckStatus:
    """failed se alguma falhou; senão undecided se alguma ficou indecisa; senão certified."""
    statuses = {check.status for check in checks}
    if CheckStatus.FAILED in statuses:
        return CheckStatus.FAILED
    if CheckStatus.UNDECIDED in statuses:
        return CheckStatus.UNDECIDED
    return CheckStatus.CERTIFIED


class Report(BaseModel):
    """Relatório de uma execução."""

    scenario: Dict[str, Any] = Field(..., description="Eco do cenário validado")
    checks: List[CheckRecord] = Field(default_factory=list)
    verdict: CheckStatus = Field(..., description="Veredito geral")
    wall_clock_seconds: Optional[float] = Field(default=None, description="Presente só com LAB_REPORT_TIMING")

    @classmethod
    def assemble(
        cls,
        scenario: Dict[str, Any],
        checks: List[CheckRecord],
        wall_clock_seconds: Optional[float] = None,
    ) -> "Report":
        ordered = sorted(checks, key=lambda check: check.name)
        return cls(
            scenario=scenario,
            checks=ordered,
            verdict=overall_verdict(ordered),
            wall_clock_seconds=wall_clock_seconds,
        )

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def check(self, name: str) -> CheckRecord:
        for record in self.checks:
            if record.name == name:
                return record
        raise KeyError(name)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)
