from fractions import Fraction
from math import floor

import pytest

from core.exceptions import DomainError
from glsm.loop_space import effective_degrees, h0, h1, loop_space_data
from glsm.models import (
    MODELS,
    Coordinate,
    GlsmCharges,
    PoincarePolynomial,
    extended_model,
    quintic_model,
)
from glsm.phases import (
    box_elements,
    fan_relation,
    inverse_box_element,
    minimal_anticones,
    moving_coordinates,
)
from glsm.state_space import (
    chen_ruan_poincare,
    jacobi_invariant_dims,
    projective_poincare,
    state_space_poincare_extended,
)

TOY = GlsmCharges("toy", (Coordinate("x", 1), Coordinate("y", -1)))


def test_models_are_calabi_yau() -> None:
    assert set(MODELS) == {"quintic", "extended"}
    for build in MODELS.values():
        assert build().is_calabi_yau()
    assert extended_model().index_of("p") == 6


@pytest.mark.parametrize(
    "charges, relation",
    [
        (quintic_model(), (1, 1, 1, 1, 1, -5)),
        (extended_model(), (1, 1, 1, 1, 1, -5, 1, -1)),
    ],
)
def test_fan_relation_matches_charges(
    charges: GlsmCharges, relation: tuple
) -> None:
    assert fan_relation(charges) == relation
    assert fan_relation(charges) == charges.weights


def test_fan_relation_requires_fan() -> None:
    with pytest.raises(DomainError):
        fan_relation(TOY)


def test_minimal_anticones() -> None:
    charges = extended_model()
    assert minimal_anticones(charges, 1) == {
        frozenset({i}) for i in (1, 2, 3, 4, 5, 7)
    }
    assert minimal_anticones(charges, -1) == {
        frozenset({6}),
        frozenset({8}),
    }
    with pytest.raises(DomainError):
        minimal_anticones(charges, 0)


def test_zero_weight_is_rejected() -> None:
    charges = GlsmCharges("flat", (Coordinate("x", 1), Coordinate("z", 0)))
    with pytest.raises(DomainError):
        minimal_anticones(charges, 1)


def test_phase_without_anticones() -> None:
    charges = GlsmCharges("positive", (Coordinate("x", 1),))
    with pytest.raises(DomainError):
        minimal_anticones(charges, -1)


@pytest.mark.parametrize("zeta, count", [(1, 3), (-1, 11)])
def test_box_counts(zeta: int, count: int) -> None:
    assert len(box_elements(extended_model(), zeta)) == count


def test_positive_box_ages() -> None:
    elements = box_elements(extended_model(), 1)
    assert [element.age for element in elements] == [0, 1, 3]
    assert elements[0].is_identity
    assert elements[2].group_element == (Fraction(1, 2), -1)
    assert elements[2].fixed_coords == frozenset({7, 8})


def test_inverse_and_moving_coordinates() -> None:
    elements = box_elements(extended_model(), 1)
    assert inverse_box_element(extended_model(), elements[2]) == elements[2]
    assert moving_coordinates(elements[0], 8) == 0
    assert moving_coordinates(elements[2], 8) == 6


@pytest.mark.parametrize("zeta", [1, -1])
def test_age_of_inverse_counts_moving_coordinates(zeta: int) -> None:
    charges = extended_model()
    for element in box_elements(charges, zeta):
        inverse = inverse_box_element(charges, element)
        assert element.age + inverse.age == moving_coordinates(
            element, len(charges)
        )


@pytest.mark.parametrize("zeta", [1, -1])
def test_chen_ruan_poincare_polynomial(zeta: int) -> None:
    assert chen_ruan_poincare(extended_model(), zeta) == PoincarePolynomial(
        {0: 1, 2: 2, 4: 2, 6: 3, 8: 2, 10: 2}
    )


@pytest.mark.parametrize("zeta", [1, -1])
def test_quintic_chen_ruan_is_projective_space(zeta: int) -> None:
    assert chen_ruan_poincare(quintic_model(), zeta) == projective_poincare(
        5
    )


def test_jacobi_invariant_dims() -> None:
    assert jacobi_invariant_dims() == [1, 101, 101, 1]
    assert jacobi_invariant_dims(3, 3) == [1, 1]


@pytest.mark.parametrize("zeta", [1, -1])
def test_state_space_poincare(zeta: int) -> None:
    assert state_space_poincare_extended(zeta) == PoincarePolynomial(
        {0: 2, 2: 2, 3: 408, 4: 2, 6: 2}
    )


@pytest.mark.parametrize(
    "x, expected_h0, expected_h1",
    [
        (Fraction(3, 2), 2, 0),
        (Fraction(0), 1, 0),
        (Fraction(-1), 0, 0),
        (Fraction(-1, 2), 0, 0),
        (Fraction(-7, 2), 0, 3),
    ],
)
def test_line_bundle_cohomology(
    x: Fraction, expected_h0: int, expected_h1: int
) -> None:
    assert h0(x) == expected_h0
    assert h1(x) == expected_h1


def test_euler_characteristic_on_tenths() -> None:
    for k in range(-50, 51):
        x = Fraction(k, 10)
        assert h0(x) - h1(x) == floor(x) + 1


@pytest.mark.parametrize(
    "degree, dims",
    [(1, (11, 6, 10, 4)), (Fraction(1, 2), (6, 3, 5, 2))],
)
def test_loop_space_dimensions(degree: Fraction, dims: tuple) -> None:
    data = loop_space_data(extended_model(), 1, degree)
    assert (data.dim_V, data.dim_W, data.dim_L, data.virtual_dim) == dims
    assert data.rank_E == data.dim_W


@pytest.mark.parametrize("degree", [Fraction(1, 10), -1])
def test_non_effective_degree(degree: Fraction) -> None:
    with pytest.raises(DomainError):
        loop_space_data(extended_model(), 1, degree)


def test_effective_degrees() -> None:
    charges = extended_model()
    assert effective_degrees(charges, 1, 3) == [0, Fraction(1, 2), 1]
    assert effective_degrees(charges, -1, 3) == [
        Fraction(-1, 5),
        Fraction(-2, 5),
        Fraction(-1, 2),
    ]


def test_virtual_dim_depends_on_coset() -> None:
    charges = extended_model()
    degrees = effective_degrees(charges, 1, 21)
    assert degrees[-1] == 10
    by_coset: dict[Fraction, set[int]] = {}
    for degree in degrees:
        data = loop_space_data(charges, 1, degree)
        by_coset.setdefault(degree % 1, set()).add(data.virtual_dim)
    assert by_coset == {Fraction(0): {4}, Fraction(1, 2): {2}}
