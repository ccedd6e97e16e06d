from fractions import Fraction

import mpmath
import pytest

from core.exceptions import DomainError
from core.serializers import deserialize
from series.evaluation import evaluate
from series.models import PuiseuxLogSeries, PuiseuxSeries
from series.operations import (
    compose,
    compose_series,
    exp_series,
    invert,
    invert_series,
    log1p_series,
    mul,
    reversion,
    theta_apply,
)
from series.serializers import PuiseuxSeriesSerializer


def series(terms: dict, order=None) -> PuiseuxSeries:
    return PuiseuxSeries(
        {Fraction(e): Fraction(c) for e, c in terms.items()}, order
    )


def test_lattice_is_enforced() -> None:
    with pytest.raises(DomainError):
        PuiseuxSeries({Fraction(1, 3): 1}, ramification=2)
    assert PuiseuxSeries({Fraction(1, 2): 1}, ramification=2)[
        Fraction(1, 2)
    ] == 1


def test_terms_beyond_order_are_dropped() -> None:
    truncated = series({0: 1, 1: 2, 3: 5}, order=3)
    assert truncated.exponents() == [0, 1]
    assert truncated.order == 3


def test_truncate_and_variable_substitutions() -> None:
    s = series({1: 1, 2: 3}, order=3)
    assert s.truncate(2).exponents() == [1]
    assert s.truncate(0).is_zero()
    half = s.substitute_power(Fraction(1, 2))
    assert half.exponents() == [Fraction(1, 2), 1]
    assert half.order == Fraction(3, 2)
    assert half[1] == 3
    scaled = s.rescale_variable(2)
    assert (scaled[1], scaled[2]) == (2, 12)
    with pytest.raises(DomainError):
        s.substitute_power(0)
    with pytest.raises(DomainError):
        series({Fraction(1, 2): 1}).rescale_variable(2)


def test_theta_apply() -> None:
    assert theta_apply(series({Fraction(3, 2): 1})) == series(
        {Fraction(3, 2): Fraction(3, 2)}
    )
    assert theta_apply(PuiseuxLogSeries.log()) == PuiseuxLogSeries([1])
    squared = PuiseuxLogSeries([0, 0, series({1: 2})])
    assert theta_apply(squared) == PuiseuxLogSeries(
        [0, series({1: 2}), series({1: 2})]
    )


def test_theta_is_a_derivation() -> None:
    a = series({0: 1, 1: Fraction(1, 2), 2: 3}, order=10)
    b = PuiseuxLogSeries(
        [series({0: 2, 3: -1}, order=10), series({1: 5}, order=10)]
    )
    left = theta_apply(mul(a, b))
    right = mul(theta_apply(a), b) + mul(a, theta_apply(b))
    assert left.agrees_with(right)


def test_ring_operations() -> None:
    assert mul(series({0: 1, 1: 1}), series({0: 1, 1: -1})) == series(
        {0: 1, 2: -1}
    )
    assert invert_series(series({0: 1, 1: 120}), 3) == series(
        {0: 1, 1: -120, 2: 14400}, order=3
    )
    assert invert_series(series({Fraction(1, 2): 1})) == series(
        {Fraction(-1, 2): 1}
    )


def test_invert_is_two_sided() -> None:
    a = series({0: 3, 1: -2, Fraction(5, 2): 7}, order=8)
    inverse = invert_series(a, 8)
    assert (a * inverse).agrees_with(series({0: 1}, order=8))


def test_invert_log_series() -> None:
    a = PuiseuxLogSeries([series({0: 1}, order=3), series({1: 1}, order=3)])
    inverse = invert(a, 3)
    assert inverse.part(0).coefficients == {Fraction(0): Fraction(1)}
    assert inverse.part(1).coefficients == {Fraction(1): Fraction(-1)}
    assert inverse.part(2).coefficients == {Fraction(2): Fraction(2)}


def test_invert_errors() -> None:
    with pytest.raises(DomainError):
        invert_series(PuiseuxSeries.zero())
    with pytest.raises(DomainError):
        invert(PuiseuxLogSeries([0, series({0: 1}, order=3)]), 3)


def test_exp_and_log() -> None:
    assert exp_series(series({1: 770}), 3) == series(
        {0: 1, 1: 770, 2: 296450}, order=3
    )
    assert exp_series(PuiseuxSeries.zero()) == series({0: 1})
    assert log1p_series(series({1: 1}), 3) == series(
        {1: 1, 2: Fraction(-1, 2)}, order=3
    )
    a = series({1: 2, Fraction(3, 2): -1}, order=6)
    assert log1p_series(exp_series(a) - 1).agrees_with(a)
    with pytest.raises(DomainError):
        exp_series(series({0: 1, 1: 1}), 3)


@pytest.mark.parametrize(
    "terms, expected",
    [
        ({1: 1, 2: 770}, {1: 1, 2: -770, 3: 1185800}),
        ({1: 1}, {1: 1}),
        ({1: 2}, {1: Fraction(1, 2)}),
    ],
)
def test_reversion(terms: dict, expected: dict) -> None:
    inverse = reversion(series(terms), 4)
    assert inverse.coefficients == {
        Fraction(e): Fraction(c) for e, c in expected.items()
    }


def test_reversion_composes_to_identity() -> None:
    mirror = series({1: 1, 2: 770, 3: 1185800, Fraction(7, 2): 3}, order=6)
    inverse = reversion(mirror)
    assert compose_series(mirror, inverse).agrees_with(
        series({1: 1}, order=6)
    )
    with pytest.raises(DomainError):
        reversion(series({2: 1}))


def test_compose_series() -> None:
    square = series({2: 1})
    composed = compose_series(square, series({1: 1, 2: 1}, order=4))
    assert composed.coefficients == {
        Fraction(2): Fraction(1),
        Fraction(3): Fraction(2),
        Fraction(4): Fraction(1),
    }


def test_compose_rewrites_logarithms() -> None:
    inner = series({1: 1, 2: 1}, order=4)
    composed = compose(PuiseuxLogSeries.log(), inner)
    assert composed.part(1).coefficients == {Fraction(0): Fraction(1)}
    assert composed.part(0).coefficients == {
        Fraction(1): Fraction(1),
        Fraction(2): Fraction(-1, 2),
    }


def test_evaluate() -> None:
    value = evaluate(series({Fraction(1, 2): 2}), 4, 64)
    assert abs(value - 4) < mpmath.mpf(2) ** -60
    log_value = evaluate(PuiseuxLogSeries.log(), mpmath.e, 64)
    assert abs(log_value - 1) < mpmath.mpf(2) ** -60


def test_serializer() -> None:
    source = PuiseuxLogSeries(
        [series({Fraction(1, 2): 30}, order=2), series({1: -5}, order=2)]
    )
    data = PuiseuxSeriesSerializer(source).data
    assert data["order"] == [2, 1]
    assert [1, 2, 30, 1, 0] in data["terms"]
    assert deserialize(PuiseuxSeriesSerializer, data) == source
    with pytest.raises(DomainError):
        deserialize(PuiseuxSeriesSerializer, {"terms": []})


@pytest.mark.parametrize(
    "terms",
    [
        [[1, 0, 1, 1, 0]],
        [[1, 2, 1, 1, -1]],
        [[1, 2, 1.5, 1, 0]],
        [[1, 2, 1, 1, True]],
        [[1, 2, 1, 1]],
    ],
)
def test_serializer_rejects_malformed_terms(terms: list) -> None:
    data = {"ramification": 2, "order": None, "terms": terms}
    with pytest.raises(DomainError):
        deserialize(PuiseuxSeriesSerializer, data)


def test_serializer_accepts_untruncated_series() -> None:
    data = {"ramification": 2, "order": None, "terms": [[1, 2, 3, 1, 0]]}
    value = deserialize(PuiseuxSeriesSerializer, data)
    assert value.order is None
    assert value.part(0)[Fraction(1, 2)] == 3
