from fractions import Fraction

import pytest

from core.exceptions import DomainError
from exact.laurent import LaurentPolynomial, cyclotomic
from exact.scalars import (
    PiHalfScalar,
    binomial,
    double_factorial,
    factorial,
    gamma_half_integer,
    harmonic,
    pochhammer,
)


@pytest.mark.parametrize(
    "n, expected",
    [(-1, 1), (0, 1), (1, 1), (5, 15), (8, 384), (9, 945)],
)
def test_double_factorial(n: int, expected: int) -> None:
    assert double_factorial(n) == expected


def test_factorials_reject_negative_arguments() -> None:
    with pytest.raises(DomainError):
        factorial(-1)
    with pytest.raises(DomainError):
        double_factorial(-3)
    with pytest.raises(DomainError):
        pochhammer(1, -1)


def test_pochhammer_and_harmonic() -> None:
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(3, 0) == 1
    assert harmonic(4) == Fraction(25, 12)
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0


@pytest.mark.parametrize(
    "k, coeff",
    [
        (Fraction(1, 2), Fraction(1)),
        (Fraction(3, 2), Fraction(1, 2)),
        (Fraction(7, 2), Fraction(15, 8)),
        (Fraction(-1, 2), Fraction(-2)),
        (Fraction(-3, 2), Fraction(4, 3)),
    ],
)
def test_gamma_half_integer(k: Fraction, coeff: Fraction) -> None:
    assert gamma_half_integer(k) == PiHalfScalar(coeff, 1)


def test_gamma_half_integer_rejects_integers() -> None:
    with pytest.raises(DomainError):
        gamma_half_integer(2)


@pytest.mark.parametrize("numerator", range(-21, 22, 2))
def test_gamma_half_integer_recursion(numerator: int) -> None:
    k = Fraction(numerator, 2)
    assert gamma_half_integer(k + 1) == k * gamma_half_integer(k)


def test_pochhammer_splits(rng) -> None:
    for _ in range(50):
        x = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        m, n = rng.randint(0, 20), rng.randint(0, 20)
        assert pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(
            x + m, n
        )


def test_pi_half_scalar_grading() -> None:
    root_pi = gamma_half_integer(Fraction(1, 2))
    assert root_pi**6 == PiHalfScalar(1, 6)
    assert (root_pi**6) / (root_pi**2) == PiHalfScalar(1, 4)
    assert PiHalfScalar(2, 3) + PiHalfScalar(1, 3) == PiHalfScalar(3, 3)
    assert PiHalfScalar(0, 5) == PiHalfScalar(0)
    with pytest.raises(DomainError):
        PiHalfScalar(1, 2) + PiHalfScalar(1, 3)
    with pytest.raises(DomainError):
        PiHalfScalar(1, 1) / PiHalfScalar(1, 2)


def test_laurent_arithmetic() -> None:
    x = LaurentPolynomial.monomial(1)
    one = LaurentPolynomial.monomial(0)
    product = (x + 1) * (x - 1)
    assert product == LaurentPolynomial({2: 1, 0: -1})
    assert (one - x.shift(-1)) ** 2 == LaurentPolynomial(
        {0: 1, -1: -2, -2: 1}
    )
    assert product.evaluate(Fraction(1, 2)) == Fraction(-3, 4)
    assert x.substitute_power(-5) == LaurentPolynomial.monomial(-5)
    assert str(LaurentPolynomial({2: -15, 1: 10})) == "-15x^2 + 10x"


def test_laurent_rejects_fractional_coefficients() -> None:
    with pytest.raises(DomainError):
        LaurentPolynomial({1: Fraction(1, 2)})


def test_laurent_division() -> None:
    dividend = LaurentPolynomial({3: 1, -2: -1})
    quotient, remainder = dividend.divide(LaurentPolynomial({1: 1, 0: -1}))
    assert remainder.is_zero()
    assert quotient * LaurentPolynomial({1: 1, 0: -1}) == dividend
    with pytest.raises(DomainError):
        dividend.divide(LaurentPolynomial())


@pytest.mark.parametrize(
    "order, coefficients",
    [
        (1, {1: 1, 0: -1}),
        (2, {1: 1, 0: 1}),
        (5, {4: 1, 3: 1, 2: 1, 1: 1, 0: 1}),
        (6, {2: 1, 1: -1, 0: 1}),
    ],
)
def test_cyclotomic(order: int, coefficients: dict) -> None:
    assert cyclotomic(order) == LaurentPolynomial(coefficients)
