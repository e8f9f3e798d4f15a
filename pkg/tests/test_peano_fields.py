"""
Testes dos campos coordenada a coordenada em c₀.

Testa:
- Coordenadas do campo de Dieudonné e dos campos espalhados
- Rejeição de coeficientes sem certificado ℓ₁
- Estimativas de limitação e de transferência de Lipschitz
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.partition.schemes import dyadic_partition, get_scheme
from src.peano.fields import (
    FieldKind,
    TruncatedPoint,
    combined_eval,
    combined_field,
    dieudonne_coord,
    dieudonne_field,
    l1_bound_check,
    lipschitz_transfer_check,
    spread_coord,
    spread_field,
)
from src.sequences.lazy import finite_sequence, geometric_sequence, mother_c0, unit_vector
from src.utils.errors import DomainError, MissingCertificateError

coords = st.lists(st.floats(min_value=-100.0, max_value=100.0, allow_nan=False), max_size=20)


class TestTruncatedPoint:
    """Pontos de c₀ com suporte finito."""

    def test_coord_beyond_truncation_is_zero(self):
        x = TruncatedPoint.of([0.0, 0.0, 4.0])

        assert x.coord(3) == 4.0
        assert x.coord(10) == 0.0
        assert x.length == 3

    def test_sup_norm(self):
        assert TruncatedPoint.of([1.0, -5.0, 2.0]).sup_norm == 5.0
        assert TruncatedPoint.zeros().sup_norm == 0.0

    def test_unit(self):
        assert TruncatedPoint.unit(2).coords.tolist() == [0.0, 1.0]

    def test_invalid_index(self):
        with pytest.raises(DomainError):
            TruncatedPoint.zeros(3).coord(0)
        with pytest.raises(DomainError):
            TruncatedPoint.unit(0)


class TestCoordinates:
    """f_n(x) = √|x_n| + 1/(n+1) e suas versões espalhadas."""

    def test_dieudonne_example(self):
        assert dieudonne_coord(3, TruncatedPoint.of([0.0, 0.0, 4.0])) == 2.25

    def test_dieudonne_at_origin(self):
        assert dieudonne_coord(1, TruncatedPoint.zeros()) == 0.5

    def test_negative_coordinate_uses_absolute_value(self):
        assert dieudonne_coord(1, TruncatedPoint.of([-9.0])) == 3.5

    def test_spread_coord_inside_and_outside_block(self):
        scheme = dyadic_partition()
        origin = TruncatedPoint.zeros()

        # decode(3) = (1, 2)
        assert spread_coord(1, scheme, 3, origin) == 0.25
        assert spread_coord(2, scheme, 3, origin) == 0.0

    def test_combined_eval_uses_block_coefficient(self):
        # decode(4) = (3, 1) e a_3 = 0.5³
        value = combined_eval(geometric_sequence(0.5), dyadic_partition(), 4, TruncatedPoint.zeros())

        assert value == 0.125 * 0.2

    def test_combined_requires_l1_certificate(self):
        with pytest.raises(MissingCertificateError):
            combined_eval(mother_c0(), dyadic_partition(), 1, TruncatedPoint.zeros())
        with pytest.raises(MissingCertificateError):
            combined_field(mother_c0())

    def test_spread_fields_have_disjoint_support(self, scheme):
        x = TruncatedPoint.of([1.0, 4.0, 9.0, 16.0])
        for n in range(1, 200):
            nonzero = [i for i in range(1, 30) if spread_coord(i, scheme, n, x) != 0.0]
            assert nonzero == [scheme.decode(n)[0]]


class TestCoordinateField:
    """Campos como objetos chamáveis."""

    def test_dieudonne_image(self):
        image = dieudonne_field().image(TruncatedPoint.zeros(), 4)

        assert image.tolist() == [0.5, 1.0 / 3.0, 0.25, 0.2]

    def test_spread_image(self):
        field = spread_field(1)

        assert field.kind == FieldKind.SPREAD
        assert field.image(TruncatedPoint.zeros(), 4).tolist() == [0.5, 0.0, 0.25, 0.0]

    def test_combined_image_matches_pointwise(self, scheme):
        a = finite_sequence([2.0, -1.0, 0.5])
        field = combined_field(a, scheme)
        x = TruncatedPoint.of([3.0, 0.0, -2.0])

        image = field.image(x, 30)
        pointwise = [field(n, x) for n in range(1, 31)]
        assert image.tolist() == pointwise
        assert field.label == f"L({a.label})"


class TestL1Estimates:
    """Limitação e transferência de Lipschitz com peso Σ|a_i|."""

    def test_unit_coefficient_bound_is_tight(self):
        check = l1_bound_check(unit_vector(1), TruncatedPoint.zeros(), 1)

        assert check.holds
        assert check.lhs == check.rhs == 0.5

    def test_invalid_m(self):
        with pytest.raises(DomainError):
            l1_bound_check(unit_vector(1), TruncatedPoint.zeros(), 0)

    @pytest.mark.parametrize("tag", ["dyadic", "cantor"])
    @given(values=coords, m=st.integers(min_value=1, max_value=6), ratio=st.floats(min_value=0.1, max_value=0.9))
    @settings(max_examples=50, deadline=None)
    def test_l1_bound_holds(self, tag, values, m, ratio):
        check = l1_bound_check(geometric_sequence(ratio), TruncatedPoint.of(values), m, get_scheme(tag))

        assert check.holds

    @pytest.mark.parametrize("tag", ["dyadic", "cantor"])
    @given(left=coords, right=coords, m=st.integers(min_value=1, max_value=6))
    @settings(max_examples=50, deadline=None)
    def test_lipschitz_transfer_holds(self, tag, left, right, m):
        a = finite_sequence([1.0, -0.5, 0.25, 3.0])
        check = lipschitz_transfer_check(a, TruncatedPoint.of(left), TruncatedPoint.of(right), m, get_scheme(tag))

        assert check.holds

    def test_lipschitz_same_point_is_zero(self):
        x = TruncatedPoint.of([1.0, 2.0])
        check = lipschitz_transfer_check(geometric_sequence(0.5), x, x, 3)

        assert check.lhs == 0.0
        assert check.holds

    def test_explicit_truncation(self):
        check = l1_bound_check(finite_sequence([1.0, 1.0]), TruncatedPoint.zeros(), 2, truncation=8)

        # f_1(0) = 1/2 é o máximo; Σ|a_i| = 2
        assert check.lhs == 0.5
        assert check.rhs == 1.0

    def test_large_m_evaluates_only_block_heads(self):
        """m = 40 no esquema diádico: bloco 40 começa em 2^39."""
        x = TruncatedPoint.of([0.0, 4.0])
        check = l1_bound_check(geometric_sequence(0.5), x, 40)

        # f_2(x) = 2 + 1/3 no bloco 2, peso 1/4
        assert check.lhs == pytest.approx(0.25 * (2.0 + 1.0 / 3.0))
        assert check.holds

    def test_large_m_lipschitz(self):
        x = TruncatedPoint.of([0.0, 4.0])
        y = TruncatedPoint.of([1.0])
        check = lipschitz_transfer_check(geometric_sequence(0.5), x, y, 40)

        assert check.holds

    @pytest.mark.parametrize("tag", ["dyadic", "cantor"])
    def test_default_indices_match_full_truncation(self, tag):
        x = TruncatedPoint.of([1.0, -4.0, 0.0, 9.0])
        y = TruncatedPoint.of([0.0, 1.0])
        a = geometric_sequence(0.5)
        scheme = get_scheme(tag)

        sparse = l1_bound_check(a, x, 6, scheme)
        full = l1_bound_check(a, x, 6, scheme, truncation=64)
        assert (sparse.lhs, sparse.rhs) == (full.lhs, full.rhs)

        sparse = lipschitz_transfer_check(a, x, y, 6, scheme)
        full = lipschitz_transfer_check(a, x, y, 6, scheme, truncation=64)
        assert (sparse.lhs, sparse.rhs) == (full.lhs, full.rhs)

    def test_m_beyond_int64_rejected(self):
        with pytest.raises(DomainError):
            l1_bound_check(geometric_sequence(0.5), TruncatedPoint.zeros(), 70)
