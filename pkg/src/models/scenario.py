"""
Modelos Pydantic para cenários de certificação.

Um cenário descreve uma construção (campo de Peano ou espalhamento em
(Σ X_n)_p, (Σ X_n)_0, (Σ X_n)_p⁺), seus orçamentos e tolerâncias. É lido
de um arquivo TOML com seções aninhadas.
"""

import tomllib
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.config.logging import get_logger
from src.config.settings import LabSettings
from src.utils.errors import ScenarioError

logger = get_logger(__name__)


class ScenarioKind(str, Enum):
    """Construções suportadas."""

    PEANO = "peano"
    SPREAD_LP = "spread_lp"
    SPREAD_C0 = "spread_c0"
    SPREAD_LP_PLUS = "spread_lp_plus"


# ============================================================
# Seções
# ============================================================


class StrictModel(BaseModel):
    """Base dos modelos de cenário: chaves desconhecidas são erro."""

    model_config = ConfigDict(extra="forbid")


class PartitionSection(StrictModel):
    """Esquema de partição de ℕ em blocos."""

    scheme: Literal["dyadic", "cantor"] = Field(default="dyadic", description="Etiqueta do esquema")
    sweep_limit: int = Field(default=1_000_000, ge=1, description="Maior n da verificação de bijeção")


class SequenceSection(StrictModel):
    """Vetor-mãe e expoentes testados."""

    mother: Optional[Literal["ell_p", "c0", "ell_p_plus"]] = Field(
        default=None, description="Vetor-mãe (padrão conforme o tipo do cenário)"
    )
    p: Optional[float] = Field(default=None, gt=0, description="Expoente p do espaço alvo")
    q_list: List[float] = Field(default_factory=list, description="Expoentes q testados")


class SpreadSection(StrictModel):
    """Família de isomorfos e slots de T."""

    delta: float = Field(default=1.0, ge=1, description="Constante δ dos isomorfos uniformes")
    model_dim: int = Field(default=8, ge=1, description="Dimensão do modelo de X")
    extra_dims: int = Field(default=0, ge=0, description="Dimensões extras dos componentes X_n")
    heterogeneous: bool = Field(default=False, description="Dimensões d_n variáveis")
    norm: Literal["l1", "l2", "sup"] = Field(default="l1", description="Norma dos componentes")
    slots: int = Field(default=3, ge=1, description="Quantidade de vetores w_i")
    rungs: int = Field(default=6, ge=1, description="Degraus p + 1/k de ℓ_p⁺")
    decay_epsilon: float = Field(default=1e-2, gt=0, description="ε do índice de decaimento do vetor-mãe em c₀")
    range_decay_epsilon: float = Field(default=0.25, gt=0, description="ε do decaimento de z = T(w) em (Σ X_n)_0")
    strict_q: Optional[float] = Field(default=None, description="q da inclusão estrita ℓ_p⁺ ⊊ ℓ_q")


class PeanoSection(StrictModel):
    """Campo L(a) e problema de Cauchy da testemunha."""

    coefficients: List[float] = Field(default_factory=lambda: [1.0], description="Coeficientes a_i (suporte finito)")
    t0: float = Field(default=0.0, description="Instante inicial")
    y0: float = Field(default=0.0, description="Valor inicial b das coordenadas")
    horizon: float = Field(default=4.0, gt=0, description="t* − t0")
    step: float = Field(default=1e-4, gt=0, description="Passo do RK4")
    independence_blocks: int = Field(default=4, ge=1, description="Blocos da verificação de posto")


class BudgetSection(StrictModel):
    """Orçamentos inteiros (multiplicados por LAB_BUDGET_SCALE)."""

    summation: int = Field(default=1_000_000, ge=1, description="N das somas parciais")
    block_sample: int = Field(default=64, ge=1, description="Posições amostradas por bloco")
    truncation: int = Field(default=256, ge=1, description="Comprimento dos pontos truncados")
    identity_n: int = Field(default=100_000, ge=1, description="N da identidade de norma espalhada")
    random_draws: int = Field(default=1000, ge=1, description="Sorteios das verificações aleatórias")
    truncations: List[int] = Field(
        default_factory=lambda: [1_000, 10_000, 100_000], description="Truncamentos crescentes de ℓ_p⁺"
    )

    @model_validator(mode="after")
    def _positive_truncations(self) -> "BudgetSection":
        if not self.truncations or min(self.truncations) < 1:
            raise ValueError("truncations deve conter inteiros >= 1")
        return self

    def scaled(self, settings: LabSettings) -> "BudgetSection":
        """Cópia com todos os orçamentos inteiros escalados."""
        return BudgetSection(
            summation=settings.scale_budget(self.summation),
            block_sample=settings.scale_budget(self.block_sample),
            truncation=settings.scale_budget(self.truncation),
            identity_n=settings.scale_budget(self.identity_n),
            random_draws=settings.scale_budget(self.random_draws),
            truncations=[settings.scale_budget(n) for n in self.truncations],
        )


class ToleranceSection(StrictModel):
    """Limiares e tolerâncias."""

    divergence_threshold: float = Field(default=1e3, gt=0, description="Limiar dos certificados de divergência")
    tolerance: float = Field(default=1e-6, gt=0, description="Meta relativa do resto")
    bound_slack: float = Field(default=1e-12, gt=0, description="Folga das desigualdades")
    witness: float = Field(default=1e-3, gt=0, description="Folga da cota de explosão")
    ode_relative: float = Field(default=1e-6, gt=0, description="Concordância RK4 vs oráculo")


# ============================================================
# Cenário
# ============================================================

_DEFAULT_MOTHER = {
    ScenarioKind.SPREAD_LP: "ell_p",
    ScenarioKind.SPREAD_C0: "c0",
    ScenarioKind.SPREAD_LP_PLUS: "ell_p_plus",
}


class Scenario(StrictModel):
    """
    Cenário completo.

    Exemplo (TOML):
        kind = "spread_lp"
        seed = 7

        [sequence]
        p = 2.0
        q_list = [0.5, 1.0, 1.5]
    """

    kind: ScenarioKind
    seed: int = Field(default=0, ge=0, description="Semente de toda amostragem aleatória")
    partition: PartitionSection = Field(default_factory=PartitionSection)
    sequence: SequenceSection = Field(default_factory=SequenceSection)
    spread: SpreadSection = Field(default_factory=SpreadSection)
    peano: PeanoSection = Field(default_factory=PeanoSection)
    budgets: BudgetSection = Field(default_factory=BudgetSection)
    tolerances: ToleranceSection = Field(default_factory=ToleranceSection)

    @model_validator(mode="after")
    def _check_kind_constraints(self) -> "Scenario":
        if self.kind == ScenarioKind.PEANO:
            if not any(a != 0 for a in self.peano.coefficients):
                raise ValueError("peano.coefficients precisa de um coeficiente não nulo")
            return self

        if self.sequence.mother is None:
            self.sequence.mother = _DEFAULT_MOTHER[self.kind]  # type: ignore[assignment]
        if self.sequence.mother != _DEFAULT_MOTHER[self.kind]:
            raise ValueError(f"{self.kind.value} exige vetor-mãe {_DEFAULT_MOTHER[self.kind]}")
        if any(q <= 0 for q in self.sequence.q_list):
            raise ValueError("Todos os q devem ser > 0")

        p = self.sequence.p
        if self.kind == ScenarioKind.SPREAD_LP:
            if p is None:
                raise ValueError("spread_lp exige sequence.p")
            if any(q >= p for q in self.sequence.q_list):
                raise ValueError(f"spread_lp exige q < p = {p}")
        elif self.kind == ScenarioKind.SPREAD_LP_PLUS:
            if p is None or p < 1:
                raise ValueError("spread_lp_plus exige sequence.p >= 1")
            if any(q <= p for q in self.sequence.q_list):
                raise ValueError(f"spread_lp_plus exige q > p = {p}")
            if self.spread.strict_q is not None and self.spread.strict_q <= p:
                raise ValueError(f"spread.strict_q deve ser > p = {p}")
        return self

    def echo(self) -> Dict[str, Any]:
        """Cópia serializável para o relatório."""
        return self.model_dump(mode="json")


# ============================================================
# Leitura e padrões
# ============================================================


def parse_scenario(data: Dict[str, Any]) -> Scenario:
    """Valida um dicionário de cenário."""
    try:
        return Scenario.model_validate(data)
    except ValidationError as exc:
        raise ScenarioError(f"Cenário inválido: {exc}") from exc


def load_scenario(path: Path) -> Scenario:
    """
    Lê e valida um arquivo TOML.

    Raises:
        ScenarioError: arquivo ausente, TOML malformado ou validação falhou
    """
    try:
        with open(path, "rb") as handle:
            data = tomllib.load(handle)
    except OSError as exc:
        raise ScenarioError(f"Não foi possível ler {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ScenarioError(f"TOML inválido em {path}: {exc}") from exc

    scenario = parse_scenario(data)
    logger.info("Cenário carregado", path=str(path), kind=scenario.kind.value, seed=scenario.seed)
    return scenario


_DEFAULTS: Dict[ScenarioKind, Dict[str, Any]] = {
    ScenarioKind.PEANO: {"kind": "peano"},
    ScenarioKind.SPREAD_LP: {
        "kind": "spread_lp",
        "sequence": {"p": 2.0, "q_list": [0.5, 1.0, 1.5]},
    },
    ScenarioKind.SPREAD_C0: {
        "kind": "spread_c0",
        "sequence": {"q_list": [1.0, 2.0, 5.0]},
    },
    ScenarioKind.SPREAD_LP_PLUS: {
        "kind": "spread_lp_plus",
        "sequence": {"p": 1.0, "q_list": [1.5, 2.0]},
        "spread": {"strict_q": 2.0},
        "tolerances": {"divergence_threshold": 100.0},
    },
}


def default_scenario(kind: str) -> Scenario:
    """Cenário padrão de um tipo."""
    try:
        key = ScenarioKind(kind)
    except ValueError:
        raise ScenarioError(f"Tipo de cenário desconhecido: {kind}")
    return parse_scenario(_DEFAULTS[key])


def _toml_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return f'"{value}"'
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list):
        return "[" + ", ".join(_toml_value(v) for v in value) + "]"
    return str(value)


def to_toml(scenario: Scenario) -> str:
    """Renderiza o cenário em TOML (campos nulos são omitidos)."""
    data = scenario.model_dump(mode="json")
    lines: List[str] = []
    for key, value in data.items():
        if not isinstance(value, dict) and value is not None:
            lines.append(f"{key} = {_toml_value(value)}")
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append("")
            lines.append(f"[{key}]")
            for inner, item in value.items():
                if item is not None:
                    lines.append(f"{inner} = {_toml_value(item)}")
    return "\n".join(lines) + "\n"
