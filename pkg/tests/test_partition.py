"""
Testes dos esquemas de partição de ℕ em blocos.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.partition.schemes import (
    available_schemes,
    bijection_sweep,
    block_prefix,
    cantor_partition,
    dyadic_partition,
    get_scheme,
)
from src.utils.errors import DomainError


class TestDyadicPartition:
    """n = 2^{i-1}(2j-1)."""

    def test_block_prefix_example(self):
        assert block_prefix(dyadic_partition(), 3, 3) == [4, 12, 20]

    def test_first_block_is_odd_numbers(self):
        assert block_prefix(dyadic_partition(), 1, 5) == [1, 3, 5, 7, 9]

    def test_decode_known_values(self):
        scheme = dyadic_partition()

        assert scheme.decode(1) == (1, 1)
        assert scheme.decode(12) == (3, 2)
        assert scheme.decode(2**40) == (41, 1)

    def test_scalar_version_exact_beyond_int64(self):
        """A versão escalar usa inteiros Python sem limite."""
        scheme = dyadic_partition()
        n = scheme.encode(80, 3)

        assert n == 5 * 2**79
        assert scheme.decode(n) == (80, 3)

    def test_vectorized_block_limit(self):
        with pytest.raises(DomainError):
            dyadic_partition().encode_many(np.array([63]), np.array([1]))


class TestCantorPartition:
    """n = (i+j-2)(i+j-1)/2 + j."""

    def test_first_values(self):
        scheme = cantor_partition()

        assert [scheme.encode(1, j) for j in range(1, 5)] == [1, 3, 6, 10]
        assert scheme.encode(2, 1) == 2
        assert scheme.decode(5) == (2, 2)

    def test_vectorized_decode_matches_scalar(self):
        scheme = cantor_partition()
        ns = np.arange(1, 5001, dtype=np.int64)
        blocks, positions = scheme.decode_many(ns)

        expected = [scheme.decode(int(n)) for n in ns]
        assert list(zip(blocks.tolist(), positions.tolist())) == expected


class TestPartitionInvariants:
    """Bijeção, cobertura disjunta e monotonicidade dentro do bloco."""

    @pytest.mark.parametrize("tag", ["dyadic", "cantor"])
    @given(i=st.integers(min_value=1, max_value=40), j=st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=100, deadline=None)
    def test_decode_inverts_encode(self, tag, i, j):
        scheme = get_scheme(tag)

        assert scheme.decode(scheme.encode(i, j)) == (i, j)

    @pytest.mark.parametrize("tag", ["dyadic", "cantor"])
    @given(n=st.integers(min_value=1, max_value=10**15))
    @settings(max_examples=100, deadline=None)
    def test_encode_inverts_decode(self, tag, n):
        scheme = get_scheme(tag)
        i, j = scheme.decode(n)

        assert scheme.encode(i, j) == n

    @pytest.mark.parametrize("tag", ["dyadic", "cantor"])
    @given(i=st.integers(min_value=1, max_value=30), count=st.integers(min_value=0, max_value=50))
    @settings(max_examples=50, deadline=None)
    def test_block_strictly_increasing(self, tag, i, count):
        prefix = block_prefix(get_scheme(tag), i, count)

        assert len(prefix) == count
        assert all(a < b for a, b in zip(prefix, prefix[1:]))

    def test_bijection_sweep(self, scheme):
        assert bijection_sweep(scheme, 1_000_000) == (True, 0)

    def test_disjoint_cover(self, scheme):
        """Cada n <= limite aparece em exatamente um bloco."""
        limit = 2000
        seen = set()
        for i in range(1, limit + 1):
            for j in range(1, limit + 1):
                n = scheme.encode(i, j)
                if n > limit:
                    break
                assert n not in seen
                seen.add(n)

        assert seen == set(range(1, limit + 1))

    def test_block_positions_match_encode(self, scheme):
        positions = scheme.block_positions(4, 3, 10)

        assert positions.tolist() == [scheme.encode(4, j) for j in range(3, 11)]

    def test_invalid_indices(self, scheme):
        with pytest.raises(DomainError):
            scheme.encode(0, 1)
        with pytest.raises(DomainError):
            scheme.decode(0)
        with pytest.raises(DomainError):
            block_prefix(scheme, 1, -1)


class TestSchemeRegistry:
    """Resolução por etiqueta."""

    def test_available(self):
        assert available_schemes() == ["dyadic", "cantor"]

    def test_get_scheme(self):
        assert get_scheme("cantor") is cantor_partition()

    def test_unknown_scheme(self):
        with pytest.raises(DomainError):
            get_scheme("hilbert")
