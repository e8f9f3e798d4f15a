"""
Configuração de fixtures para testes pytest.
"""

import os

import numpy as np
import pytest

# Configurar variáveis de ambiente para testes ANTES de importar o pacote
os.environ.setdefault("APP_ENV", "development")
os.environ.setdefault("APP_LOG_LEVEL", "WARNING")
os.environ.setdefault("LAB_BUDGET_SCALE", "1.0")

from src.config.logging import setup_logging
from src.models.scenario import Scenario, default_scenario
from src.norms.engine import NormPolicy
from src.partition.schemes import PartitionScheme, cantor_partition, dyadic_partition
from src.spread.isomorphs import IsomorphFamily

# Uma única configuração, presa ao stderr da sessão (não ao de capsys)
setup_logging()


@pytest.fixture(params=["dyadic", "cantor"])
def scheme(request) -> PartitionScheme:
    """Os dois esquemas de partição."""
    return dyadic_partition() if request.param == "dyadic" else cantor_partition()


@pytest.fixture
def small_policy() -> NormPolicy:
    """Orçamento de mesa: força bruta curta e condensação como reserva."""
    return NormPolicy(budget=100_000, divergence_threshold=1e3, tolerance=1e-6)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def family() -> IsomorphFamily:
    return IsomorphFamily(delta=2.0, seed=7)


@pytest.fixture
def slot_vectors():
    """Três vetores de slot com entradas inteiras pequenas."""
    return [
        np.array([1.0, -2.0, 0.0, 3.0, 0.0, 0.0, 1.0, 0.0]),
        np.array([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
        np.array([2.0, 1.0, 1.0, -1.0, 0.0, 2.0, 0.0, -3.0]),
    ]


def small_budgets(scenario: Scenario) -> Scenario:
    """Reduz os orçamentos de um cenário para execução rápida nos testes."""
    budgets = scenario.budgets.model_copy(
        update={
            "summation": 100_000,
            "block_sample": 8,
            "truncation": 64,
            "identity_n": 10_000,
            "random_draws": 50,
            "truncations": [1_000, 10_000],
        }
    )
    partition = scenario.partition.model_copy(update={"sweep_limit": 10_000})
    peano = scenario.peano.model_copy(update={"step": 1e-3, "horizon": 2.0})
    return scenario.model_copy(update={"budgets": budgets, "partition": partition, "peano": peano})


@pytest.fixture
def quick_scenario():
    """Fábrica de cenários padrão com orçamentos reduzidos."""

    def build(kind: str) -> Scenario:
        return small_budgets(default_scenario(kind))

    return build
