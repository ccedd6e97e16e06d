from fractions import Fraction

import mpmath
import pytest

from branes.algebra import (
    ONE_MINUS_FIFTH,
    ONE_PLUS_INVERSE,
    char_insertion,
    decompose_for_continuation,
    grade_restriction_check,
    vanishing_order,
    window_half_width,
)
from branes.models import (
    FIXTURES,
    Brane,
    LaurentChar,
    extended_walcher,
    koszul_char,
    lg_disk,
    named_brane,
    quintic_tc,
    structure_sheaf,
)
from branes.serializers import (
    BraneSerializer,
    LaurentCharField,
    brane_from_argument,
)
from core.exceptions import DecompositionError, DomainError
from core.serializers import deserialize
from glsm.models import extended_model, quintic_model

WALCHER_CHAR = LaurentChar(
    {2: 1, 1: -5, 0: 10, -1: -10, -2: 5, -3: -1}
)


def test_koszul_char_expands_product() -> None:
    assert koszul_char([1] * 5, 2) == WALCHER_CHAR
    assert koszul_char([]) == LaurentChar({0: 1})
    assert koszul_char([5]) == LaurentChar({0: 1, -5: -1})


def test_named_branes() -> None:
    assert set(FIXTURES) == {
        "extended-walcher",
        "structure",
        "quintic-tc",
        "lg-disk",
    }
    brane = named_brane("extended-walcher")
    assert brane.char == WALCHER_CHAR
    assert brane.offset == Fraction(1, 2)
    with pytest.raises(DomainError):
        named_brane("d0")


def test_walcher_decomposition() -> None:
    f, g = decompose_for_continuation(extended_walcher().char)
    assert g == LaurentChar({2: 16})
    assert f == quintic_tc().char
    assert f * ONE_PLUS_INVERSE + g * ONE_MINUS_FIFTH == WALCHER_CHAR
    assert g * ONE_MINUS_FIFTH == lg_disk().char


def test_decomposition_of_zero_char() -> None:
    f, g = decompose_for_continuation(LaurentChar())
    assert f.is_zero()
    assert g.is_zero()


def test_decomposition_parity_error() -> None:
    with pytest.raises(DecompositionError) as info:
        decompose_for_continuation(structure_sheaf().char)
    assert info.value.remainder == 1


def random_char(rng, low: int = -6, high: int = 6) -> LaurentChar:
    return LaurentChar(
        {n: rng.randint(-3, 3) for n in range(low, high + 1)}
    )


def divisible_mod_two(char: LaurentChar, low: int, high: int) -> bool:
    """Есть ли h над F_2 с char ≡ (1 + T^{-1})·h, supp h ⊂ [low+1, high]."""
    target = sum(1 << (n - low) for n, c in char if c % 2)
    return any(
        mask ^ (mask >> 1) == target
        for mask in range(0, 1 << (high - low + 1), 2)
    )


def test_random_decompositions(rng) -> None:
    failures = 0
    for _ in range(200):
        char = random_char(rng)
        try:
            f, g = decompose_for_continuation(char)
        except DecompositionError:
            failures += 1
            assert char.evaluate(Fraction(-1)) % 2
            assert not divisible_mod_two(char, -6, 6)
        else:
            assert f * ONE_PLUS_INVERSE + g * ONE_MINUS_FIFTH == char
    assert 0 < failures < 200


@pytest.mark.parametrize(
    "charges, half_width",
    [(quintic_model(), Fraction(5, 2)), (extended_model(), Fraction(3))],
)
def test_window_half_width(charges, half_width: Fraction) -> None:
    assert window_half_width(charges) == half_width


def test_walcher_brane_is_grade_restricted() -> None:
    brane = extended_walcher()
    result = grade_restriction_check(brane.char, 3, brane.offset)
    assert result.passed
    assert result.violations == ()


def test_window_violations_are_reported() -> None:
    result = grade_restriction_check(
        LaurentChar({3: 1, 0: 1}), 3, Fraction(1, 2)
    )
    assert not result.passed
    assert result.violations == (3,)
    with pytest.raises(DomainError):
        grade_restriction_check(WALCHER_CHAR, 0, 0)


def test_char_insertion_values() -> None:
    insertion = char_insertion(WALCHER_CHAR)
    with mpmath.workprec(64):
        assert abs(insertion(0)) < mpmath.mpf(10) ** -15
        assert mpmath.almosteq(insertion(mpmath.mpf("0.5")), 32, 1e-15)


def test_char_insertion_is_ring_map(rng) -> None:
    with mpmath.workprec(128):
        for _ in range(20):
            a, b = random_char(rng), random_char(rng)
            sigma = mpmath.mpf(rng.uniform(-1, 1))
            ch_a = char_insertion(a)(sigma)
            ch_b = char_insertion(b)(sigma)
            scale = 1 + abs(ch_a) * abs(ch_b)
            product = char_insertion(a * b)(sigma)
            total = char_insertion(a + b)(sigma)
            assert abs(product - ch_a * ch_b) < 1e-30 * scale
            assert abs(total - ch_a - ch_b) < 1e-30 * scale


@pytest.mark.parametrize("n", [-2, 0, 3])
def test_walcher_insertion_vanishes_to_fifth_order(n: int) -> None:
    insertion = char_insertion(WALCHER_CHAR)
    with mpmath.workprec(256):
        eps = mpmath.mpf("1e-7")
        near = insertion(n + eps)
        assert abs(near) < 1e-30
        ratio = insertion(n + 2 * eps) / near
        assert abs(ratio - 32) < 1e-4


@pytest.mark.parametrize(
    "char, sigma, order",
    [
        (WALCHER_CHAR, 0, 5),
        (WALCHER_CHAR, Fraction(1, 2), 0),
        (lg_disk().char, Fraction(1, 5), 1),
        (lg_disk().char, Fraction(2, 5), 1),
        (lg_disk().char, Fraction(1, 2), 0),
        (quintic_tc().char, Fraction(1, 2), 1),
    ],
)
def test_vanishing_order(char: LaurentChar, sigma, order: int) -> None:
    assert vanishing_order(char, sigma) == order


def test_vanishing_order_of_zero_char() -> None:
    with pytest.raises(DomainError):
        vanishing_order(LaurentChar(), 0)


def test_brane_serializer() -> None:
    data = BraneSerializer(lg_disk()).data
    assert data == {
        "label": "lg-disk",
        "offset": [1, 2],
        "char": {"-3": -16, "2": 16},
    }
    assert deserialize(BraneSerializer, data) == lg_disk()


def test_brane_serializer_defaults() -> None:
    brane = deserialize(BraneSerializer, {"char": {"0": 1}})
    assert brane == Brane(LaurentChar({0: 1}), Fraction(0), "inline")
    with pytest.raises(DomainError):
        deserialize(BraneSerializer, {"offset": [1, 2]})


@pytest.mark.parametrize(
    "char",
    [
        {"a": 1},
        [1, 2],
        {"1": "x"},
        {"2": 1.5},
        {"2": 16.9},
        {"0": True},
        {"2": "16"},
        {"2.5": 1},
    ],
)
def test_char_rejects_inexact_coefficients(char: object) -> None:
    with pytest.raises(DomainError):
        deserialize(BraneSerializer, {"char": char})


@pytest.mark.parametrize("offset", [[1, 0], [1], [1, 2, 3], [0.5, 1]])
def test_offset_must_be_rational_pair(offset: list) -> None:
    with pytest.raises(DomainError):
        deserialize(BraneSerializer, {"char": {"0": 1}, "offset": offset})


def test_char_field_representation() -> None:
    assert LaurentCharField().to_representation(WALCHER_CHAR)["-3"] == -1


def test_brane_from_argument() -> None:
    inline = brane_from_argument(' {"2": 16, "-3": -16} ')
    assert inline.char == lg_disk().char
    assert inline.label == "inline"
    assert inline.offset == 0
    shifted = brane_from_argument("quintic-tc", Fraction(1, 2))
    assert shifted.offset == Fraction(1, 2)
    assert shifted.label == "quintic-tc"
    with pytest.raises(DomainError):
        brane_from_argument("{not json")


@pytest.mark.parametrize(
    "argument", ['{"2": 1.5, "0": true}', '{"2": 16.9}', '{"2": null}']
)
def test_brane_from_argument_rejects_non_integers(argument: str) -> None:
    with pytest.raises(DomainError):
        brane_from_argument(argument)
