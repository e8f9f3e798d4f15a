"""
Modelos de dados do laboratório.

Exporta os modelos Pydantic de cenário e relatório.
"""

from src.models.report import (
    EXIT_CODES,
    EXIT_CONFIG_ERROR,
    CheckRecord,
    CheckStatus,
    Report,
    clean_number,
    overall_verdict,
)
from src.models.scenario import (
    BudgetSection,
    PartitionSection,
    PeanoSection,
    Scenario,
    ScenarioKind,
    SequenceSection,
    SpreadSection,
    ToleranceSection,
    default_scenario,
    load_scenario,
    parse_scenario,
    to_toml,
)

__all__ = [
    # Relatório
    "EXIT_CODES",
    "EXIT_CONFIG_ERROR",
    "CheckRecord",
    "CheckStatus",
    "Report",
    "clean_number",
    "overall_verdict",
    # Cenário
    "BudgetSection",
    "PartitionSection",
    "PeanoSection",
    "Scenario",
    "ScenarioKind",
    "SequenceSection",
    "SpreadSection",
    "ToleranceSection",
    "default_scenario",
    "load_scenario",
    "parse_scenario",
    "to_toml",
]
