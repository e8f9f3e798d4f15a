"""
Testes dos certificados sobre a imagem de T.

Testa:
- Divergência de z = T(w) abaixo de p e convergência em p
- Degraus do espaço ℓ_p⁺ e inclusões estritas
- Injetividade, identificação de slots e decaimento em c₀
"""

import numpy as np
import pytest

from src.norms.engine import Converged, DivergenceCertificate, NormPolicy
from src.partition.schemes import dyadic_partition
from src.sequences.lazy import mother_c0, mother_ell_p, mother_ell_p_plus
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
from src.spread.isomorphs import IsomorphFamily
from src.utils.errors import DomainError, WitnessRejectedError


class TestRangeDivergence:
    """Σ‖z_n‖^q pelo bloco do primeiro w_m ≠ 0."""

    @pytest.mark.parametrize("delta", [1.0, 2.0])
    def test_diverges_below_p(self, scheme, slot_vectors, small_policy, delta):
        fam = IsomorphFamily(delta=delta, seed=7)
        verdict = range_divergence_certificate(mother_ell_p(2.0), scheme, fam, slot_vectors, 1.0, small_policy)

        assert isinstance(verdict, DivergenceCertificate)
        assert verdict.method == "condensation_chain"
        assert verdict.notes["block"] == 1
        assert verdict.partial > verdict.threshold

    def test_converges_at_p(self, scheme, family, slot_vectors, small_policy):
        verdict = range_divergence_certificate(mother_ell_p(2.0), scheme, family, slot_vectors, 2.0, small_policy)

        assert isinstance(verdict, Converged)
        assert verdict.remainder_bound > 0

    def test_direct_sum_crossing(self, family):
        """Limiar baixo: a soma direta do bloco já cruza."""
        w_list = [np.zeros(8), np.full(8, 4.0)]
        policy = NormPolicy(budget=10_000, divergence_threshold=1.0)
        verdict = range_divergence_certificate(mother_c0(), dyadic_partition(), family, w_list, 1.0, policy)

        assert isinstance(verdict, DivergenceCertificate)
        assert verdict.method == "partial_sum"
        assert verdict.notes["block"] == 2

    def test_all_zero_slots_rejected(self, family, small_policy):
        with pytest.raises(WitnessRejectedError):
            range_divergence_certificate(mother_c0(), dyadic_partition(), family, [np.zeros(8)], 1.0, small_policy)

    @pytest.mark.parametrize("q", [0.5, 1.0, 1.5])
    def test_chain_termwise(self, scheme, family, slot_vectors, q):
        assert divergence_chain_check(mother_ell_p(2.0), scheme, family, slot_vectors, q, 5000).holds


class TestPlusSpace:
    """Degraus p + 1/k e independência das coordenadas."""

    def test_ladder_exponents(self):
        assert PlusSpaceLadder(1.0, 3).exponents == [2.0, 1.5, 1.0 + 1.0 / 3.0]

    def test_ladder_validation(self):
        with pytest.raises(DomainError):
            PlusSpaceLadder(0.5)
        with pytest.raises(DomainError):
            PlusSpaceLadder(1.0, rungs=0)

    def test_cauchy_on_every_rung(self, scheme, family, slot_vectors):
        report = plus_space_cauchy_check(
            mother_ell_p_plus(1.0),
            scheme,
            family,
            slot_vectors,
            PlusSpaceLadder(1.0, rungs=3),
            truncations=[1_000, 10_000],
            policy=NormPolicy(budget=10_000, divergence_threshold=100.0),
            sample=4,
        )

        assert len(report.rungs) == 3
        assert report.rung_independent
        assert isinstance(report.divergence, DivergenceCertificate)
        assert all(rung.holds for rung in report.rungs)
        assert report.holds

    def test_empty_slots(self, family):
        report = plus_space_cauchy_check(
            mother_ell_p_plus(1.0), dyadic_partition(), family, [], PlusSpaceLadder(1.0), truncations=[10]
        )

        assert report.rungs == []
        assert report.divergence is None

    def test_strict_inclusions(self):
        result = strict_inclusion_check(1.0, 2.0, NormPolicy(budget=100_000, divergence_threshold=100.0))

        assert result.upper_exponent == 1.25
        assert len(result.lower_rungs) == 6
        assert result.holds

    def test_strict_inclusion_requires_ordered_exponents(self):
        with pytest.raises(DomainError):
            strict_inclusion_check(2.0, 1.0)


class TestInjectivity:
    """Posto da matriz de blocos e identificação de w_m a partir de z."""

    def test_rank_counts_nonzero_slots(self, scheme, family, slot_vectors):
        check = range_independence_check(mother_ell_p(2.0), scheme, family, slot_vectors)

        assert check.size == 3
        assert check.rank == 2
        assert check.diagonal

    def test_full_rank_basis(self, scheme, family):
        basis = [np.eye(8)[k] for k in range(4)]
        check = range_independence_check(mother_ell_p(2.0), scheme, family, basis)

        assert check.full_rank

    def test_identify_slot_vector(self, scheme, family, slot_vectors):
        r = scheme.encode(3, 2)
        result = identify_slot_vector(mother_ell_p(2.0), scheme, family, slot_vectors, r)

        assert result.block == 3
        assert result.holds
        np.testing.assert_allclose(result.recovered, slot_vectors[2], rtol=1e-14)

    def test_coordinate_outside_slots(self, scheme, family, slot_vectors):
        with pytest.raises(DomainError):
            identify_slot_vector(mother_ell_p(2.0), scheme, family, slot_vectors, scheme.encode(5, 1))


class TestRangeDecay:
    """z = T(w) ∈ (Σ X_n)_0 quando ξ ∈ c₀."""

    def test_single_slot(self, scheme, family):
        w = np.zeros(8)
        w[0] = 1.0
        decay = range_decay_check(mother_c0(), scheme, family, [w], 1.0)

        # ε₁ = 1/(2·1): 1/log(j+1) < 1/2 a partir de j = 7
        assert decay.decay_index == {1: 7}
        assert decay.exceptional_count == 6
        assert decay.largest_exceptional == scheme.encode(1, 6)
        assert decay.sampled_holds
        assert decay.sup_norm > 0

    def test_zero_slots_skipped(self, family, slot_vectors):
        decay = range_decay_check(mother_c0(), dyadic_partition(), family, slot_vectors, 0.25)

        assert set(decay.decay_index) == {1, 3}
        assert decay.sampled_holds

    def test_invalid_epsilon(self, family, slot_vectors):
        with pytest.raises(DomainError):
            range_decay_check(mother_c0(), dyadic_partition(), family, slot_vectors, 0.0)
