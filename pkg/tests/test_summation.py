"""
Testes da soma compensada.
"""

import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from src.norms.summation import EPSILON, CompensatedSum, plain_total

finite_floats = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


class TestCompensatedSum:
    """Acumulador de Neumaier sobre blocos somados com fsum."""

    def test_cancellation_in_one_chunk(self):
        acc = CompensatedSum()
        acc.add_array(np.array([1.0, 1e-16, -1.0]))

        assert acc.total == 1e-16
        assert acc.count == 3

    def test_neumaier_large_terms(self):
        """Termos grandes não apagam os pequenos."""
        acc = CompensatedSum()
        for value in (1e100, 1.0, -1e100):
            acc.add(value)

        assert acc.total == 1.0

    def test_empty_chunk_ignored(self):
        acc = CompensatedSum()
        acc.add_array(np.zeros(0))

        assert acc.total == 0.0
        assert acc.count == 0
        assert acc.error_bound == 0.0

    def test_copy_is_independent(self):
        acc = CompensatedSum()
        acc.add(2.0)
        clone = acc.copy()
        clone.add(3.0)

        assert acc.total == 2.0
        assert clone.total == 5.0

    def test_merge(self):
        left, right = CompensatedSum(), CompensatedSum()
        left.add_array(np.array([0.1, 0.2]))
        right.add_array(np.array([0.3, 0.4]))
        merged = left.merge(right)

        assert math.isclose(merged.total, 1.0, rel_tol=0, abs_tol=2 * EPSILON)
        assert merged.count == 4

    @given(
        head=st.lists(finite_floats, min_size=1, max_size=60),
        tail=st.lists(finite_floats, min_size=1, max_size=60),
    )
    @settings(max_examples=100, deadline=None)
    def test_error_bound_holds(self, head, tail):
        """|total − soma exata| <= limite de erro reportado."""
        acc = CompensatedSum()
        acc.add_array(np.array(head))
        acc.add_array(np.array(tail))

        exact = math.fsum(head + tail)
        assert abs(acc.total - exact) <= acc.error_bound

    @given(values=st.lists(finite_floats, min_size=1, max_size=100))
    @settings(max_examples=50, deadline=None)
    def test_single_chunk_is_correctly_rounded(self, values):
        acc = CompensatedSum()
        acc.add_array(np.array(values))

        assert acc.total == math.fsum(values)


def test_plain_total():
    assert plain_total(np.array([1.0, 2.0, 3.5])) == 6.5
