"""
Execução dos conjuntos de verificações de um cenário.

Responsável por:
- Montar os objetos da construção (partição, vetor-mãe, isomorfos, L(a))
- Rodar cada verificação e convertê-la em CheckRecord
- Consolidar o relatório (ordenado por nome, determinístico pela semente)
"""

import math
import time
from typing import Dict, List, Optional, Sequence, Tuple, Type

import numpy as np

from src.config.logging import get_logger
from src.config.settings import LabSettings, get_settings
from src.models.report import CheckRecord, CheckStatus, Report
from src.models.scenario import BudgetSection, Scenario, ScenarioKind
from src.norms.engine import (
    BoundCheck,
    Converged,
    ConvergenceVerdict,
    DivergenceCertificate,
    NormPolicy,
    Undecided,
    classify,
    recheck_certificate,
    sup_norm_truncated,
)
from src.norms.claims import certify_membership
from src.partition.schemes import PartitionScheme, bijection_sweep, get_scheme
from src.peano.fields import (
    TruncatedPoint,
    combined_eval,
    dieudonne_coord,
    l1_bound_check,
    lipschitz_transfer_check,
)
from src.peano.ode import ScalarCauchyProblem, analytic_time, dieudonne_integral_check, integrate_family
from src.peano.witness import identify_coefficient, peano_failure_witness, spread_independence_check
from src.sequences.lazy import ScalarSequence, finite_sequence, mother_vector, zero_sequence
from src.sequences.membership import MembershipClaim, Polarity, SpaceTag
from src.spread.certificates import (
    PlusSpaceLadder,
    divergence_chain_check,
    identify_slot_vector,
    plus_space_cauchy_check,
    range_decay_check,
    range_divergence_certificate,
    range_independence_check,
    strict_inclusion_check,
)
from src.spread.isomorphs import ComponentSpaceFamily, IsomorphFamily
from src.spread.tensor import (
    T_coord,
    T_coord_direct_sum,
    T_norm_bound_check,
    bilinearity_holds,
    spread_norm_identity,
)
from src.utils.errors import CertificateNotFoundError, WitnessRejectedError

logger = get_logger(__name__)

_IDENTITY_EXPONENTS = (0.5, 1.0, 2.0, 3.0)
_IDENTITY_BLOCKS = 8
_SUP_NORM_SAMPLE = 1024


def _status(holds: bool) -> CheckStatus:
    return CheckStatus.CERTIFIED if holds else CheckStatus.FAILED


def _verdict_status(verdict: ConvergenceVerdict, expected: Type) -> CheckStatus:
    if isinstance(verdict, expected):
        return CheckStatus.CERTIFIED
    if isinstance(verdict, Undecided):
        return CheckStatus.UNDECIDED
    return CheckStatus.FAILED


def _combine(statuses: Sequence[CheckStatus]) -> CheckStatus:
    if CheckStatus.FAILED in statuses:
        return CheckStatus.FAILED
    if CheckStatus.UNDECIDED in statuses:
        return CheckStatus.UNDECIDED
    return CheckStatus.CERTIFIED


class SuiteRunner:
    """
    Executa o conjunto de verificações do tipo do cenário.

    Exemplo:
        report = SuiteRunner().run(default_scenario("peano"))
        report.verdict  # CheckStatus.CERTIFIED
    """

    def __init__(self, settings: Optional[LabSettings] = None):
        self._settings = settings or get_settings().lab

    def run(self, scenario: Scenario) -> Report:
        started = time.perf_counter()
        budgets = scenario.budgets.scaled(self._settings)
        rng = np.random.default_rng(scenario.seed)
        scheme = get_scheme(scenario.partition.scheme)

        logger.info("Iniciando conjunto de verificações", kind=scenario.kind.value, seed=scenario.seed)

        checks: List[CheckRecord] = [self._partition_check(scheme, scenario, budgets)]
        if scenario.kind == ScenarioKind.PEANO:
            checks.extend(self._peano_checks(scenario, scheme, budgets, rng))
        else:
            checks.extend(self._spread_checks(scenario, scheme, budgets, rng))

        for record in checks:
            log = logger.warning if record.status == CheckStatus.UNDECIDED else logger.debug
            log("Verificação concluída", check=record.name, status=record.status.value)

        elapsed = time.perf_counter() - started if self._settings.report_timing else None
        report = Report.assemble(scenario.echo(), checks, elapsed)
        logger.info(
            "Conjunto de verificações concluído",
            kind=scenario.kind.value,
            verdict=report.verdict.value,
            checks=len(report.checks),
        )
        return report

    # ============================================
    # Partição
    # ============================================

    def _partition_check(self, scheme: PartitionScheme, scenario: Scenario, budgets: BudgetSection) -> CheckRecord:
        limit = self._settings.scale_budget(scenario.partition.sweep_limit)
        ok, first_bad = bijection_sweep(scheme, limit)
        return CheckRecord.build(
            "partition.bijection",
            "encode(decode(n)) = n e cobertura disjunta para n <= limite",
            _status(ok),
            scheme=scheme.name,
            limit=limit,
            first_failure=first_bad,
        )

    # ============================================
    # Peano
    # ============================================

    def _peano_checks(
        self, scenario: Scenario, scheme: PartitionScheme, budgets: BudgetSection, rng: np.random.Generator
    ) -> List[CheckRecord]:
        section = scenario.peano
        tolerances = scenario.tolerances
        a = finite_sequence(section.coefficients, label="a")
        draws = budgets.random_draws
        records: List[CheckRecord] = []

        def random_point() -> TruncatedPoint:
            length = int(rng.integers(1, budgets.truncation + 1))
            return TruncatedPoint.of(rng.uniform(-5.0, 5.0, size=length))

        def random_coefficients() -> ScalarSequence:
            length = int(rng.integers(1, 7))
            return finite_sequence(rng.uniform(-2.0, 2.0, size=length))

        # Estimativas ℓ₁
        bound_slack = math.inf
        transfer_slack = math.inf
        bound_ok = transfer_ok = True
        for _ in range(draws):
            coefficients = random_coefficients()
            m = int(rng.integers(1, coefficients.support_end + 1))  # type: ignore[operator]
            x, y = random_point(), random_point()
            bound = l1_bound_check(coefficients, x, m, scheme, tolerance=tolerances.bound_slack)
            transfer = lipschitz_transfer_check(coefficients, x, y, m, scheme, tolerance=tolerances.bound_slack)
            bound_ok = bound_ok and bound.holds
            transfer_ok = transfer_ok and transfer.holds
            bound_slack = min(bound_slack, bound.slack)
            transfer_slack = min(transfer_slack, transfer.slack)
        records.append(
            CheckRecord.build(
                "peano.l1_bound",
                "‖Σ_{i<=m} a_i ℕᵢf(x)‖ <= ‖f(x)‖ Σ_{i<=m} |a_i|",
                _status(bound_ok),
                draws=draws,
                min_slack=bound_slack,
            )
        )
        records.append(
            CheckRecord.build(
                "peano.lipschitz_transfer",
                "‖Σ a_i ℕᵢf(x) − Σ a_i ℕᵢf(y)‖ <= ‖f(x) − f(y)‖ Σ |a_i|",
                _status(transfer_ok),
                draws=draws,
                min_slack=transfer_slack,
            )
        )

        # Identidade de coordenadas
        identity_ok = True
        for _ in range(draws):
            x = random_point()
            n = int(rng.integers(1, budgets.truncation + 1))
            block, _ = scheme.decode(n)
            identity_ok = identity_ok and combined_eval(a, scheme, n, x) == a.eval(block) * dieudonne_coord(n, x)
        records.append(
            CheckRecord.build(
                "peano.coordinate_identity",
                "L(a)_n(x) = a_i f_n(x) com decode(n) = (i, j)",
                _status(identity_ok),
                draws=draws,
            )
        )

        # Identificação dos coeficientes
        x0 = random_point()
        identified = []
        for r in range(1, len(section.coefficients) + 1):
            sample = [(j, random_point()) for j in range(1, 9)]
            identified.append(identify_coefficient(a, scheme, r, x0, sample))
        records.append(
            CheckRecord.build(
                "peano.coefficient_identification",
                "a_r = h_{r_1}(x)/f_{r_1}(x) e h_{r_j} = a_r f_{r_j}",
                _status(all(item.holds for item in identified)),
                recovered=[item.recovered for item in identified],
                max_residual=max(item.max_residual for item in identified),
            )
        )

        # Independência dos campos espalhados
        rank = spread_independence_check(list(range(1, section.independence_blocks + 1)), scheme, random_point())
        records.append(
            CheckRecord.build(
                "peano.spread_independence",
                "{ℕᵢf} linearmente independentes (matriz diagonal de posto k)",
                _status(rank.full_rank and rank.diagonal),
                rank=rank.rank,
                size=rank.size,
            )
        )

        # Desigualdade integral
        integral_ok = True
        integral_slack = math.inf
        for _ in range(draws):
            alpha, beta = rng.uniform(-10.0, 10.0, size=2)
            gamma = float(10.0 ** rng.uniform(-3.0, 0.0))
            check = dieudonne_integral_check(float(alpha), float(beta), gamma, tolerances.bound_slack)
            integral_ok = integral_ok and check.holds
            integral_slack = min(integral_slack, check.slack)
        records.append(
            CheckRecord.build(
                "peano.integral_inequality",
                "|∫_α^β dx/(√|x|+γ)| <= 2(√|α| + √|β|)",
                _status(integral_ok),
                draws=draws,
                min_slack=integral_slack,
            )
        )

        records.extend(self._ode_checks(section.step, tolerances.ode_relative, tolerances.witness))
        records.extend(self._witness_checks(scenario, scheme, budgets, a))
        return records

    def _ode_checks(self, step: float, relative: float, witness_tolerance: float) -> List[CheckRecord]:
        lams = np.arange(1.0, 6.0)
        gammas = np.geomspace(1e-3, 1.0, 5)
        starts = np.linspace(0.0, 10.0, 5)
        grid = np.array(np.meshgrid(lams, gammas, starts, indexing="ij")).reshape(3, -1)
        horizon = 1.0
        times, values = integrate_family(grid[0], grid[1], grid[2], 0.0, step, horizon)

        worst = 0.0
        for k in range(grid.shape[1]):
            problem = ScalarCauchyProblem(lam=float(grid[0, k]), gamma=float(grid[1, k]), y0=float(grid[2, k]))
            predicted = analytic_time(problem, float(values[-1, k]))
            worst = max(worst, abs(predicted - horizon) / horizon)

        margins = np.sqrt(np.abs(values)) + np.sqrt(grid[2]) - grid[0] * times[:, None] / 2.0
        min_margin = float(margins.min())
        return [
            CheckRecord.build(
                "peano.ode_oracle",
                "RK4 concorda com t0 + (F(u) − F(y0))/λ",
                _status(worst <= relative),
                problems=int(grid.shape[1]),
                step=step,
                max_relative_error=worst,
            ),
            CheckRecord.build(
                "peano.blowup_inequality",
                "√u(t) + √y0 >= λ(t − t0)/2 ao longo da trajetória",
                _status(min_margin >= -witness_tolerance),
                min_margin=min_margin,
            ),
        ]

    def _witness_checks(
        self, scenario: Scenario, scheme: PartitionScheme, budgets: BudgetSection, a: ScalarSequence
    ) -> List[CheckRecord]:
        section = scenario.peano
        t_star = section.t0 + section.horizon
        sample = list(range(1, budgets.block_sample + 1))
        kwargs = dict(t0=section.t0, y0=section.y0, step=section.step, tolerance=scenario.tolerances.witness)

        witness = peano_failure_witness(a, scheme, sample, t_star, **kwargs)
        mirrored = finite_sequence([-c for c in section.coefficients], label="-a")
        reversed_witness = peano_failure_witness(mirrored, scheme, sample, t_star, **kwargs)

        try:
            peano_failure_witness(zero_sequence(), scheme, sample, t_star, **kwargs)
            rejected = False
        except WitnessRejectedError:
            rejected = True

        return [
            CheckRecord.build(
                "peano.witness",
                "|u_{m_j}(t*)| >= (|a_m|(t* − t0)/2 − √|y0|)₊² uniformemente em j",
                _status(witness.holds),
                block=witness.block,
                coefficient=witness.coefficient,
                horizon=witness.horizon,
                lower_bound=witness.lower_bound,
                uniform_bound=witness.uniform_bound,
                samples=len(witness.positions),
                spread=witness.spread,
            ),
            CheckRecord.build(
                "peano.witness_reversed",
                "a_m < 0: v(t) = u(−t) fornece a mesma cota",
                _status(reversed_witness.holds and reversed_witness.bound_values == witness.bound_values),
                uniform_bound=reversed_witness.uniform_bound,
                reversed_time=reversed_witness.reversed_time,
            ),
            CheckRecord.build(
                "peano.zero_field_rejected",
                "L(0) = 0 não admite testemunha",
                _status(rejected),
            ),
        ]

    # ============================================
    # Espalhamento
    # ============================================

    def _spread_checks(
        self, scenario: Scenario, scheme: PartitionScheme, budgets: BudgetSection, rng: np.random.Generator
    ) -> List[CheckRecord]:
        section = scenario.spread
        tolerances = scenario.tolerances
        p = scenario.sequence.p
        xi = mother_vector(scenario.sequence.mother, p)  # type: ignore[arg-type]
        fam = IsomorphFamily(
            delta=section.delta,
            seed=scenario.seed,
            components=ComponentSpaceFamily(
                model_dim=section.model_dim,
                extra_dims=section.extra_dims,
                heterogeneous=section.heterogeneous,
                norm=section.norm,
                seed=scenario.seed,
            ),
        )
        policy = NormPolicy(
            budget=budgets.summation,
            divergence_threshold=tolerances.divergence_threshold,
            tolerance=tolerances.tolerance,
        )
        w_list = self._slot_vectors(rng, section.slots, section.model_dim)
        records: List[CheckRecord] = [self._mother_membership(scenario, xi, policy)]

        # Identidade ‖y_i‖_r = ‖ξ‖_r
        identity_ok = all(
            spread_norm_identity(xi, scheme, i, r, budgets.identity_n)
            for r in _IDENTITY_EXPONENTS
            for i in range(1, _IDENTITY_BLOCKS + 1)
        )
        records.append(
            CheckRecord.build(
                "spread.norm_identity",
                "Σ_{j<=N} |(y_i)_{i_j}|^r = Σ_{j<=N} |ξ_j|^r, bit a bit",
                _status(identity_ok),
                exponents=list(_IDENTITY_EXPONENTS),
                blocks=_IDENTITY_BLOCKS,
                n=budgets.identity_n,
            )
        )

        records.extend(self._isomorph_checks(rng, scheme, fam, xi, w_list, budgets.random_draws))

        if scenario.kind == ScenarioKind.SPREAD_LP:
            report = T_norm_bound_check(  # type: ignore[arg-type]
                xi, scheme, fam, w_list, p, budgets.identity_n, tolerances.bound_slack
            )
            records.append(
                CheckRecord.build(
                    "spread.norm_bound",
                    "‖y_j ⊗ w_j‖_p <= δ‖w_j‖‖ξ‖_p e soma em s̃",
                    _status(report.holds),
                    aggregate_lhs=report.aggregate.lhs,
                    aggregate_rhs=report.aggregate.rhs,
                    per_term_min_slack=min(check.slack for check in report.per_term),
                )
            )
            converged = range_divergence_certificate(xi, scheme, fam, w_list, p, policy)  # type: ignore[arg-type]
            records.append(
                CheckRecord.build(
                    "spread.range_convergence_at_p",
                    "z = T(w) ∈ (Σ X_n)_p",
                    _verdict_status(converged, Converged),
                    **converged.as_numbers(),
                )
            )

        known: Dict[float, ConvergenceVerdict] = {}
        if scenario.kind == ScenarioKind.SPREAD_LP_PLUS:
            plus_records, divergence = self._plus_space_checks(scenario, scheme, fam, xi, w_list, policy, budgets)
            records.extend(plus_records)
            if divergence is not None:
                known[p] = divergence  # type: ignore[index]
            exponents = [p]
        else:
            exponents = list(scenario.sequence.q_list)

        for q in exponents:  # type: ignore[union-attr]
            if q in known:
                verdict = known[q]
            else:
                verdict = range_divergence_certificate(xi, scheme, fam, w_list, q, policy)
            records.append(
                CheckRecord.build(
                    f"spread.range_divergence.q={q:g}",
                    "Σ_n ‖z_n‖^q >= δ^{-q}‖w_m‖^q Σ_j |ξ_j|^q = ∞",
                    _verdict_status(verdict, DivergenceCertificate),
                    **verdict.as_numbers(),
                )
            )
            chain = divergence_chain_check(xi, scheme, fam, w_list, q, budgets.identity_n, tolerances.bound_slack)
            records.append(
                self._bound_record(f"spread.divergence_chain.q={q:g}", "cadeia termo a termo no bloco m", chain)
            )

        if scenario.kind == ScenarioKind.SPREAD_C0:
            records.append(self._range_decay(xi, scheme, fam, w_list, section.range_decay_epsilon))

        rank = range_independence_check(xi, scheme, fam, w_list)
        records.append(
            CheckRecord.build(
                "spread.range_independence",
                "T injetivo em slots distintos (matriz diagonal de posto k)",
                _status(rank.full_rank and rank.diagonal),
                rank=rank.rank,
                size=rank.size,
            )
        )

        identifications = [
            identify_slot_vector(xi, scheme, fam, w_list, scheme.encode(m, 1)) for m in range(1, len(w_list) + 1)
        ]
        records.append(
            CheckRecord.build(
                "spread.slot_identification",
                "α_m = R_r⁻¹(z_r)/ξ_t e z_{m_j} = ξ_j R_{m_j}(α_m)",
                _status(all(item.holds for item in identifications)),
                max_error=max(item.max_error for item in identifications),
            )
        )
        return records

    @staticmethod
    def _range_decay(
        xi: ScalarSequence, scheme: PartitionScheme, fam: IsomorphFamily, w_list: List[np.ndarray], epsilon: float
    ) -> CheckRecord:
        name = "spread.range_decay"
        anchor = "z = T(w) ∈ (Σ X_n)_0: {n : ‖z_n‖ >= ε} finito"
        try:
            decay = range_decay_check(xi, scheme, fam, w_list, epsilon)
        except CertificateNotFoundError as exc:
            return CheckRecord.build(name, anchor, CheckStatus.UNDECIDED, epsilon=epsilon, budget=exc.budget)
        return CheckRecord.build(
            name,
            anchor,
            _status(decay.sampled_holds and bool(decay.decay_index)),
            epsilon=decay.epsilon,
            decay_index=decay.decay_index,
            exceptional_count=decay.exceptional_count,
            largest_exceptional=decay.largest_exceptional,
            sup_norm=decay.sup_norm,
        )

    @staticmethod
    def _slot_vectors(rng: np.random.Generator, slots: int, dim: int) -> List[np.ndarray]:
        vectors = rng.integers(-3, 4, size=(slots, dim)).astype(np.float64)
        for row in vectors:
            if not row.any():
                row[0] = 1.0
        return [row for row in vectors]

    @staticmethod
    def _bound_record(name: str, anchor: str, check: BoundCheck) -> CheckRecord:
        return CheckRecord.build(name, anchor, _status(check.holds), **check.as_numbers())

    def _mother_membership(self, scenario: Scenario, xi: ScalarSequence, policy: NormPolicy) -> CheckRecord:
        p = scenario.sequence.p
        numbers: Dict[str, object] = {}
        statuses: List[CheckStatus] = []

        def record(q: float, expected: Type) -> None:
            verdict = classify(xi, q, policy)
            statuses.append(_verdict_status(verdict, expected))
            entry = verdict.as_numbers()
            if isinstance(verdict, DivergenceCertificate):
                entry["rechecked"] = recheck_certificate(xi, q, verdict)
                if not entry["rechecked"]:
                    statuses.append(CheckStatus.FAILED)
            numbers[f"q={q:g}"] = entry

        if scenario.kind == ScenarioKind.SPREAD_LP:
            record(p, Converged)  # type: ignore[arg-type]
            for q in scenario.sequence.q_list:
                record(q, DivergenceCertificate)
        elif scenario.kind == ScenarioKind.SPREAD_C0:
            claim = MembershipClaim(
                SpaceTag.C0, Polarity.MEMBER, budget=policy.budget, epsilon=scenario.spread.decay_epsilon
            )
            outcome = certify_membership(xi, claim, policy)
            statuses.append(CheckStatus.CERTIFIED if outcome.certified else CheckStatus.UNDECIDED)
            numbers["decay_index"] = outcome.decay_index
            numbers["sup_norm"] = sup_norm_truncated(xi, _SUP_NORM_SAMPLE)
            for q in scenario.sequence.q_list:
                record(q, DivergenceCertificate)
        else:
            record(p, DivergenceCertificate)  # type: ignore[arg-type]
            for q in scenario.sequence.q_list:
                record(q, Converged)

        return CheckRecord.build(
            "sequence.mother_membership",
            "ξ pertence ao espaço alvo e a nenhum espaço menor testado",
            _combine(statuses),
            mother=xi.label,
            **numbers,
        )

    def _isomorph_checks(
        self,
        rng: np.random.Generator,
        scheme: PartitionScheme,
        fam: IsomorphFamily,
        xi: ScalarSequence,
        w_list: List[np.ndarray],
        draws: int,
    ) -> List[CheckRecord]:
        dim = fam.model_dim
        sandwich_ok = all(
            fam.sandwich_holds(int(rng.integers(1, 1_000_000)), rng.normal(size=dim)) for _ in range(draws)
        )

        bilinear_ok = True
        length = 64
        for _ in range(draws):
            x1 = finite_sequence(rng.integers(-8, 9, size=length).astype(np.float64))
            x2 = finite_sequence(rng.integers(-8, 9, size=length).astype(np.float64))
            w1 = rng.integers(-8, 9, size=dim).astype(np.float64)
            w2 = rng.integers(-8, 9, size=dim).astype(np.float64)
            lam = float(rng.integers(-8, 9)) / 4.0
            n = int(rng.integers(1, length + 1))
            bilinear_ok = bilinear_ok and bilinearity_holds(x1, x2, w1, w2, lam, fam, n)

        formula_ok = True
        for _ in range(draws):
            n = int(rng.integers(1, 4097))
            formula_ok = formula_ok and bool(
                np.array_equal(T_coord(xi, scheme, fam, w_list, n), T_coord_direct_sum(xi, scheme, fam, w_list, n))
            )

        return [
            CheckRecord.build(
                "spread.isomorph_sandwich",
                "δ⁻¹‖w‖ <= ‖R_n(w)‖ <= δ‖w‖",
                _status(sandwich_ok),
                draws=draws,
                delta=fam.delta,
            ),
            CheckRecord.build(
                "spread.bilinearity",
                "x ⊗ (w₁ + w₂) = x ⊗ w₁ + x ⊗ w₂ e λ(x ⊗ w) = (λx) ⊗ w = x ⊗ (λw)",
                _status(bilinear_ok),
                draws=draws,
            ),
            CheckRecord.build(
                "spread.coordinate_formula",
                "T(w)_{i_j} = ξ_j R_{i_j}(w_i) = Σ_i (y_i ⊗ w_i)_{i_j}",
                _status(formula_ok),
                draws=draws,
            ),
        ]

    def _plus_space_checks(
        self,
        scenario: Scenario,
        scheme: PartitionScheme,
        fam: IsomorphFamily,
        xi: ScalarSequence,
        w_list: List[np.ndarray],
        policy: NormPolicy,
        budgets: BudgetSection,
    ) -> Tuple[List[CheckRecord], Optional[ConvergenceVerdict]]:
        """Registros da escada e da inclusão estrita, mais a divergência em q = p já calculada."""
        p = scenario.sequence.p
        ladder = PlusSpaceLadder(p, scenario.spread.rungs)  # type: ignore[arg-type]
        report = plus_space_cauchy_check(xi, scheme, fam, w_list, ladder, budgets.truncations, policy)
        rung_status = _status(all(r.holds for r in report.rungs) and report.rung_independent)

        strict_q = scenario.spread.strict_q or max(scenario.sequence.q_list or [p + 1.0])  # type: ignore[operator]
        strict = strict_inclusion_check(p, strict_q, policy, scenario.spread.rungs)  # type: ignore[arg-type]
        strict_statuses = [
            _verdict_status(strict.lower_divergence, DivergenceCertificate),
            *[_verdict_status(v, Converged) for v in strict.lower_rungs],
            _verdict_status(strict.upper_convergence, Converged),
            _verdict_status(strict.upper_divergence, DivergenceCertificate),
        ]
        records = [
            CheckRecord.build(
                "spread.plus_ladder",
                "Σ_{j<=n} ‖y_j ⊗ w_j‖_{p_k} <= δ‖ξ‖_{p_k}‖(w_j)‖₁ e caudas de Cauchy em cada degrau",
                rung_status,
                exponents=[r.exponent for r in report.rungs],
                partial_sum_slack=[r.partial_sum_bound.slack for r in report.rungs],
                tail_bounds=[r.tail_bounds for r in report.rungs],
                rung_independent=report.rung_independent,
            ),
            CheckRecord.build(
                "spread.strict_inclusion",
                "ℓ_p ⊊ ℓ_p⁺ ⊊ ℓ_q",
                _combine(strict_statuses),
                p=strict.p,
                q=strict.q,
                upper_exponent=strict.upper_exponent,
                lower_divergence=strict.lower_divergence.as_numbers(),
                upper_convergence=strict.upper_convergence.as_numbers(),
                upper_divergence=strict.upper_divergence.as_numbers(),
            ),
        ]
        return records, report.divergence


_runner: Optional[SuiteRunner] = None


def get_suite_runner() -> SuiteRunner:
    """Retorna a instância global do executor."""
    global _runner
    if _runner is None:
        _runner = SuiteRunner()
    return _runner

