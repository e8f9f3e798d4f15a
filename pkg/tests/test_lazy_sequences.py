"""
Testes das sequências preguiçosas e das afirmações de pertencimento.

Testa:
- Avaliação determinística (escalar e em lote)
- Vetores-mãe e suas caudas monótonas
- Combinação linear e sequências de suporte finito
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.sequences.lazy import (
    finite_sequence,
    geometric_sequence,
    lin_comb,
    mother_c0,
    mother_ell_p,
    mother_ell_p_plus,
    mother_vector,
    power_sequence,
    unit_vector,
    zero_sequence,
)
from src.sequences.membership import MembershipClaim, Polarity, SpaceTag
from src.utils.errors import DomainError


class TestEvaluation:
    """Avaliação de termos."""

    def test_mother_ell_p_first_term(self):
        """ξ_1 = (1·log²2)^{-1/p}."""
        assert mother_ell_p(2.0).eval(1) == pytest.approx(1.0 / math.log(2.0), rel=1e-15)

    def test_mother_c0_first_term(self):
        assert mother_c0().eval(1) == pytest.approx(1.0 / math.log(2.0), rel=1e-15)

    def test_mother_ell_p_plus_harmonic(self):
        """Para p = 1 o vetor-mãe é 1/j."""
        seq = mother_ell_p_plus(1.0)

        assert seq.eval(4) == 0.25
        assert seq.eval(1) == 1.0

    def test_index_zero_rejected(self):
        with pytest.raises(DomainError):
            mother_c0().eval(0)

    def test_values_range_rejected(self):
        with pytest.raises(DomainError):
            mother_c0().values(0, 5)

    def test_empty_range(self):
        assert mother_c0().values(5, 4).size == 0

    @given(j=st.integers(min_value=1, max_value=10**12))
    @settings(max_examples=50, deadline=None)
    def test_scalar_matches_batch(self, j):
        """eval(j) e values(j, j) produzem os mesmos bits."""
        seq = mother_ell_p(1.5)

        assert seq.eval(j) == seq.values(j, j)[0]

    def test_huge_index_evaluated_in_float(self):
        """Índices além de 2^62 são avaliados em float64."""
        value = mother_c0().eval(2**70)

        assert value == pytest.approx(1.0 / (70 * math.log(2.0)), rel=1e-12)


class TestMotherVectors:
    """Biblioteca de vetores-mãe."""

    @given(p=st.floats(min_value=0.25, max_value=6.0))
    @settings(max_examples=25, deadline=None)
    def test_ell_p_tail_nonincreasing(self, p):
        seq = mother_ell_p(p)
        values = np.abs(seq.values(seq.tail_monotone_from, 2000))

        assert np.all(np.diff(values) <= 0)

    def test_c0_tail_nonincreasing(self):
        values = mother_c0().values(1, 5000)

        assert np.all(np.diff(values) <= 0)

    def test_invalid_exponents(self):
        with pytest.raises(DomainError):
            mother_ell_p(0.0)
        with pytest.raises(DomainError):
            mother_ell_p_plus(0.5)
        with pytest.raises(DomainError):
            power_sequence(-1.0)

    def test_families_registered(self):
        assert mother_ell_p(2.0).family == "ell_p"
        assert mother_c0().family == "c0"
        assert mother_ell_p_plus(1.0).family == "power"
        assert mother_ell_p_plus(1.0).params == {"r": 1.0}

    def test_mother_vector_by_tag(self):
        assert mother_vector("c0").label == "mother_c0"
        assert mother_vector("ell_p", 2.0).params == {"p": 2.0}

    def test_mother_vector_requires_exponent(self):
        with pytest.raises(DomainError):
            mother_vector("ell_p")
        with pytest.raises(DomainError):
            mother_vector("unknown", 1.0)


class TestFiniteSequences:
    """Sequências de suporte finito e elementares."""

    def test_finite_sequence_zero_after_support(self):
        seq = finite_sequence([1.0, -2.0, 0.5])

        assert list(seq.values(1, 5)) == [1.0, -2.0, 0.5, 0.0, 0.0]
        assert seq.support_end == 3
        assert seq.is_finitely_supported

    def test_unit_vector(self):
        seq = unit_vector(3)

        assert list(seq.values(1, 4)) == [0.0, 0.0, 1.0, 0.0]
        with pytest.raises(DomainError):
            unit_vector(0)

    def test_zero_sequence(self):
        assert not zero_sequence().values(1, 100).any()

    def test_geometric_requires_ratio_in_unit_interval(self):
        with pytest.raises(DomainError):
            geometric_sequence(1.0)
        assert geometric_sequence(0.5).eval(2) == 0.25


class TestLinearCombination:
    """Combinação linear ponto a ponto."""

    def test_empty_list_is_zero(self):
        seq = lin_comb([])

        assert seq.eval(7) == 0.0
        assert seq.support_end == 0

    def test_pointwise_sum(self):
        seq = lin_comb([(2.0, unit_vector(1)), (-1.0, unit_vector(2))])

        assert list(seq.values(1, 3)) == [2.0, -1.0, 0.0]
        assert seq.support_end == 2

    def test_infinite_support_propagates(self):
        seq = lin_comb([(1.0, unit_vector(1)), (1.0, mother_c0())])

        assert seq.support_end is None
        assert seq.tail_monotone_from is None

    @given(
        a=st.integers(min_value=-8, max_value=8),
        b=st.integers(min_value=-8, max_value=8),
        j=st.integers(min_value=1, max_value=1000),
    )
    @settings(max_examples=50, deadline=None)
    def test_linearity(self, a, b, j):
        """(aξ + bη)_j = aξ_j + bη_j."""
        xi, eta = mother_ell_p_plus(1.0), power_sequence(2.0)
        seq = lin_comb([(a, xi), (b, eta)])

        assert seq.eval(j) == pytest.approx(a * xi.eval(j) + b * eta.eval(j), abs=1e-15)


class TestMembershipClaim:
    """Descrição das afirmações."""

    def test_describe_member(self):
        claim = MembershipClaim(SpaceTag.ELL_P, Polarity.MEMBER, budget=10, exponent=2.0)

        assert claim.describe() == "∈ ell_p(2)"

    def test_describe_c0_non_member(self):
        claim = MembershipClaim(SpaceTag.C0, Polarity.NON_MEMBER, budget=10)

        assert claim.describe() == "∉ c0"
