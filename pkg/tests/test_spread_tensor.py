"""
Testes dos isomorfos R_n, do tensor x ⊗ w e do operador T.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.partition.schemes import dyadic_partition
from src.sequences.lazy import finite_sequence, mother_ell_p
from src.spread.isomorphs import ComponentSpaceFamily, IsomorphFamily, vector_norm
from src.spread.tensor import (
    T_coord,
    T_coord_direct_sum,
    T_norm_bound_check,
    TensorSequence,
    bilinearity_holds,
    first_nonzero_slot,
    make_y,
    spread_norm_identity,
    tilde_s,
)
from src.utils.errors import DomainError

small_ints = st.lists(st.integers(min_value=-8, max_value=8), min_size=8, max_size=8)
dyadic_floats = st.integers(min_value=-(10**6), max_value=10**6).map(lambda k: k / 1024.0)


class TestIsomorphFamily:
    """c_n = 2^{e_n} com |e_n| <= ⌊log₂ δ⌋."""

    def test_scales_are_powers_of_two_within_delta(self, family):
        scales = family.scales(np.arange(1, 5001))

        assert set(scales.tolist()) <= {0.5, 1.0, 2.0}

    def test_delta_one_is_identity(self):
        fam = IsomorphFamily(delta=1.0, seed=3)

        assert np.array_equal(fam.scales(np.arange(1, 100)), np.ones(99))

    def test_deterministic_per_seed(self):
        ns = np.arange(1, 200)
        first = IsomorphFamily(delta=4.0, seed=11).scales(ns)

        assert np.array_equal(first, IsomorphFamily(delta=4.0, seed=11).scales(ns))
        assert set(first.tolist()) <= {0.25, 0.5, 1.0, 2.0, 4.0}

    def test_invalid_delta(self):
        with pytest.raises(DomainError):
            IsomorphFamily(delta=0.5)

    def test_wrong_model_dimension(self, family):
        with pytest.raises(DomainError):
            family.forward(1, np.ones(3))

    @given(n=st.integers(min_value=1, max_value=10**9), w=st.lists(dyadic_floats, min_size=8, max_size=8))
    @settings(max_examples=100, deadline=None)
    def test_inverse_is_exact_and_sandwich_holds(self, n, w):
        fam = IsomorphFamily(delta=2.0, seed=7)
        vector = np.array(w)

        assert np.array_equal(fam.backward(n, fam.forward(n, vector)), vector)
        assert fam.sandwich_holds(n, vector)

    def test_heterogeneous_components(self):
        components = ComponentSpaceFamily(model_dim=4, extra_dims=3, heterogeneous=True, seed=5)
        fam = IsomorphFamily(delta=2.0, seed=5, components=components)
        w = np.array([1.0, -2.0, 3.0, 0.5])

        dims = {components.dim(n) for n in range(1, 200)}
        assert dims <= {4, 5, 6, 7}
        assert len(dims) > 1
        for n in range(1, 50):
            image = fam.forward(n, w)
            assert image.size == components.dim(n)
            assert np.array_equal(fam.backward(n, image), w)

    def test_vector_norms(self):
        v = np.array([3.0, -4.0])

        assert vector_norm(v, "l1") == 7.0
        assert vector_norm(v, "l2") == 5.0
        assert vector_norm(v, "sup") == 4.0
        with pytest.raises(DomainError):
            vector_norm(v, "l3")


class TestSpreadVectors:
    """y_i: ξ copiado no bloco ℕᵢ."""

    def test_tilde_s(self):
        assert tilde_s(2.0) == 1.0
        assert tilde_s(1.0) == 1.0
        assert tilde_s(0.5) == 0.5
        with pytest.raises(DomainError):
            tilde_s(0.0)

    def test_make_y_example(self):
        xi = mother_ell_p(2.0)
        scheme = dyadic_partition()

        # decode(3) = (1, 2)
        assert make_y(1, xi, scheme).eval(3) == xi.eval(2)
        assert make_y(2, xi, scheme).eval(3) == 0.0

    @pytest.mark.parametrize("r", [0.5, 1.0, 2.0, 3.0])
    def test_norm_identity_is_bit_exact(self, scheme, r):
        for i in (1, 3, 6):
            assert spread_norm_identity(mother_ell_p(2.0), scheme, i, r, 2000)

    def test_invalid_block(self):
        with pytest.raises(DomainError):
            make_y(0, mother_ell_p(2.0), dyadic_partition())


class TestTensor:
    """x ⊗ w = (x_n R_n(w))_n."""

    def test_tensor_coord(self, family):
        x = finite_sequence([2.0, -1.0])
        w = np.arange(1.0, 9.0)
        tensor = TensorSequence(x=x, w=w, family=family)

        assert np.array_equal(tensor.coord(1), 2.0 * family.forward(1, w))
        assert np.array_equal(tensor.coord(3), np.zeros(8))

    @given(
        x1=st.lists(st.integers(-8, 8), min_size=16, max_size=16),
        x2=st.lists(st.integers(-8, 8), min_size=16, max_size=16),
        w1=small_ints,
        w2=small_ints,
        lam=st.integers(-8, 8),
        n=st.integers(min_value=1, max_value=16),
    )
    @settings(max_examples=100, deadline=None)
    def test_bilinearity(self, x1, x2, w1, w2, lam, n):
        fam = IsomorphFamily(delta=2.0, seed=7)

        assert bilinearity_holds(
            finite_sequence([float(v) for v in x1]),
            finite_sequence([float(v) for v in x2]),
            np.array(w1, dtype=np.float64),
            np.array(w2, dtype=np.float64),
            lam / 4.0,
            fam,
            n,
        )


class TestOperatorT:
    """T((w_i)) = Σ_i y_i ⊗ w_i."""

    def test_coordinate_formula_matches_direct_sum(self, scheme, family, slot_vectors):
        xi = mother_ell_p(2.0)
        for n in range(1, 300):
            assert np.array_equal(
                T_coord(xi, scheme, family, slot_vectors, n), T_coord_direct_sum(xi, scheme, family, slot_vectors, n)
            )

    def test_coordinate_outside_slots_is_zero(self, family, slot_vectors):
        # decode(8) = (4, 1), além dos três slots
        coord = T_coord(mother_ell_p(2.0), dyadic_partition(), family, slot_vectors, 8)

        assert np.array_equal(coord, np.zeros(8))

    def test_coordinate_formula_value(self, family, slot_vectors):
        xi = mother_ell_p(2.0)
        # decode(5) = (1, 3)
        expected = xi.eval(3) * family.forward(5, slot_vectors[0])

        assert np.array_equal(T_coord(xi, dyadic_partition(), family, slot_vectors, 5), expected)

    @pytest.mark.parametrize("p", [0.5, 1.0, 2.0])
    def test_norm_bound(self, scheme, family, slot_vectors, p):
        report = T_norm_bound_check(mother_ell_p(p), scheme, family, slot_vectors, p, 2000)

        assert report.holds
        assert len(report.per_term) == 3

    def test_first_nonzero_slot(self, family, slot_vectors):
        assert first_nonzero_slot(family, slot_vectors) == 1
        assert first_nonzero_slot(family, slot_vectors[1:]) == 2
        assert first_nonzero_slot(family, [np.zeros(8)]) == 0
