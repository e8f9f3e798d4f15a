"""
Testes dos cenários TOML.
"""

import tomllib
from pathlib import Path

import pytest

from src.config.settings import LabSettings
from src.models.scenario import (
    BudgetSection,
    ScenarioKind,
    default_scenario,
    load_scenario,
    parse_scenario,
    to_toml,
)
from src.utils.errors import ScenarioError


class TestDefaults:
    """Cenários padrão de cada tipo."""

    @pytest.mark.parametrize("kind", [k.value for k in ScenarioKind])
    def test_every_kind_has_a_default(self, kind):
        scenario = default_scenario(kind)

        assert scenario.kind.value == kind
        assert scenario.seed == 0

    def test_default_mother_filled_in(self):
        assert default_scenario("spread_lp").sequence.mother == "ell_p"
        assert default_scenario("spread_c0").sequence.mother == "c0"
        assert default_scenario("spread_lp_plus").sequence.mother == "ell_p_plus"
        assert default_scenario("peano").sequence.mother is None

    def test_lp_plus_default_threshold(self):
        scenario = default_scenario("spread_lp_plus")

        assert scenario.tolerances.divergence_threshold == 100.0
        assert scenario.spread.strict_q == 2.0

    def test_unknown_kind(self):
        with pytest.raises(ScenarioError):
            default_scenario("spread_hilbert")


class TestValidation:
    """Restrições por tipo de cenário."""

    def test_lp_requires_q_below_p(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "spread_lp", "sequence": {"p": 2.0, "q_list": [1.0, 2.0]}})

    def test_lp_requires_p(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "spread_lp", "sequence": {"q_list": [1.0]}})

    def test_lp_plus_requires_q_above_p(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "spread_lp_plus", "sequence": {"p": 1.0, "q_list": [0.5]}})

    def test_lp_plus_requires_p_at_least_one(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "spread_lp_plus", "sequence": {"p": 0.5}})

    def test_mother_must_match_kind(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "spread_c0", "sequence": {"mother": "ell_p"}})

    def test_zero_peano_field_rejected(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "peano", "peano": {"coefficients": [0.0, 0.0]}})

    def test_delta_below_one_rejected(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "spread_c0", "spread": {"delta": 0.5}})

    def test_unknown_scheme_rejected(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "peano", "partition": {"scheme": "hilbert"}})

    def test_empty_truncations_rejected(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "spread_c0", "budgets": {"truncations": []}})

    def test_unknown_section_rejected(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "peano", "budget": {"summation": 5}})

    def test_unknown_key_rejected(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "spread_c0", "tolerances": {"divergence_treshold": 10.0}})

    def test_unknown_top_level_key_rejected(self):
        with pytest.raises(ScenarioError):
            parse_scenario({"kind": "peano", "sed": 3})


class TestFiles:
    """Leitura de arquivos e renderização TOML."""

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "scenario.toml"
        path.write_text('kind = "spread_lp"\nseed = 7\n\n[sequence]\np = 3.0\nq_list = [1.0]\n', encoding="utf-8")

        scenario = load_scenario(path)

        assert scenario.seed == 7
        assert scenario.sequence.p == 3.0

    def test_missing_file(self, tmp_path):
        with pytest.raises(ScenarioError):
            load_scenario(tmp_path / "missing.toml")

    def test_malformed_toml(self, tmp_path):
        path = tmp_path / "broken.toml"
        path.write_text("kind = \n", encoding="utf-8")

        with pytest.raises(ScenarioError):
            load_scenario(path)

    def test_rendered_default_parses_back(self):
        scenario = default_scenario("spread_lp_plus")

        assert parse_scenario(tomllib.loads(to_toml(scenario))) == scenario

    def test_shipped_scenarios_load(self):
        root = Path(__file__).resolve().parent.parent / "scenarios"
        kinds = {load_scenario(path).kind for path in sorted(root.glob("*.toml"))}

        assert kinds == set(ScenarioKind)


def test_budgets_scaled():
    budgets = BudgetSection().scaled(LabSettings(budget_scale=0.5))

    assert budgets.summation == 500_000
    assert budgets.truncations == [500, 5_000, 50_000]
