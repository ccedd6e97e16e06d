"""Модуль для точной скалярной арифметики над рациональными числами."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial as int_factorial
from typing import Union

from core.constants import ExactCfg
from core.exceptions import DomainError

Rational = Union[int, Fraction]


def as_fraction(value: Rational | str) -> Fraction:
    """Приводит целое число, дробь или строку вида "p/q" к Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def factorial(n: int) -> Fraction:
    """
    Возвращает n! как точное рациональное число.

    Параметры:
        n: Неотрицательное целое число.

    Возвращает:
        Fraction: Значение n!.
    """
    if n < 0:
        raise DomainError(ExactCfg.FACTORIAL_DOMAIN_ERROR.format(n=n))
    return Fraction(int_factorial(n))


@lru_cache(maxsize=None)
def _double_factorial(n: int) -> int:
    result = 1
    for factor in range(n, 1, -2):
        result *= factor
    return result


def double_factorial(n: int) -> Fraction:
    """
    Возвращает n!! = n·(n-2)·…·(2 или 1).

    Допускается n = -1 со значением 1, чтобы выражения вида (5d-2)!!
    оставались определены на границе.
    """
    if n < -1:
        raise DomainError(
            ExactCfg.DOUBLE_FACTORIAL_DOMAIN_ERROR.format(n=n)
        )
    return Fraction(_double_factorial(n))


def pochhammer(x: Rational, m: int) -> Fraction:
    """
    Возвращает возрастающий факториал (x)_m = x(x+1)…(x+m-1).

    Это точная рациональная часть отношения Γ(x+m)/Γ(x).
    """
    if m < 0:
        raise DomainError(ExactCfg.POCHHAMMER_DOMAIN_ERROR.format(m=m))
    x = as_fraction(x)
    result = Fraction(1)
    for j in range(m):
        result *= x + j
    return result


def harmonic(n: int) -> Fraction:
    """Возвращает гармоническое число H_n = 1 + 1/2 + … + 1/n."""
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def binomial(n: int, k: int) -> int:
    """Биномиальный коэффициент для неотрицательных n и 0 ≤ k ≤ n."""
    if k < 0 or k > n:
        return 0
    return int_factorial(n) // (int_factorial(k) * int_factorial(n - k))


@dataclass(frozen=True)
class PiHalfScalar:
    """
    Элемент градуированного кольца Q[√π]: coeff·π^{half_pi_power/2}.

    Поля:
    - coeff: Рациональный коэффициент.
    - half_pi_power: Неотрицательная степень √π.

    Нулевой коэффициент всегда хранится с half_pi_power = 0.
    """

    coeff: Fraction
    half_pi_power: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", as_fraction(self.coeff))
        if self.half_pi_power < 0:
            raise DomainError(
                ExactCfg.PI_POWER_DOMAIN_ERROR.format(
                    power=self.half_pi_power
                )
            )
        if self.coeff == 0:
            object.__setattr__(self, "half_pi_power", 0)

    @classmethod
    def rational(cls, value: Rational) -> PiHalfScalar:
        return cls(as_fraction(value), 0)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other: PiHalfScalar | Rational) -> PiHalfScalar:
        if not isinstance(other, PiHalfScalar):
            other = PiHalfScalar.rational(other)
        return PiHalfScalar(
            self.coeff * other.coeff, self.half_pi_power + other.half_pi_power
        )

    __rmul__ = __mul__

    def __neg__(self) -> PiHalfScalar:
        return PiHalfScalar(-self.coeff, self.half_pi_power)

    def __truediv__(self, other: PiHalfScalar | Rational) -> PiHalfScalar:
        if not isinstance(other, PiHalfScalar):
            other = PiHalfScalar.rational(other)
        if other.is_zero() or other.half_pi_power > self.half_pi_power:
            raise DomainError(
                ExactCfg.PI_DIVISION_ERROR.format(
                    left=self, right=other
                )
            )
        return PiHalfScalar(
            self.coeff / other.coeff,
            self.half_pi_power - other.half_pi_power,
        )

    def __pow__(self, exponent: int) -> PiHalfScalar:
        if exponent < 0:
            raise DomainError(
                ExactCfg.PI_POWER_DOMAIN_ERROR.format(power=exponent)
            )
        return PiHalfScalar(
            self.coeff**exponent, self.half_pi_power * exponent
        )

    def __add__(self, other: PiHalfScalar) -> PiHalfScalar:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.half_pi_power != other.half_pi_power:
            raise DomainError(
                ExactCfg.PI_GRADING_ERROR.format(left=self, right=other)
            )
        return PiHalfScalar(self.coeff + other.coeff, self.half_pi_power)

    def __sub__(self, other: PiHalfScalar) -> PiHalfScalar:
        return self + (-other)

    def __str__(self) -> str:
        if self.half_pi_power == 0:
            return str(self.coeff)
        return "{coeff}·π^({power}/2)".format(
            coeff=self.coeff, power=self.half_pi_power
        )


def gamma_half_integer(k: Rational) -> PiHalfScalar:
    """
    Возвращает Γ(k) для полуцелого k = n + 1/2 как c·√π.

    Для n ≥ 0: Γ(n+1/2) = (2n-1)!!/2^n·√π.
    Для n < 0, m = -n: Γ(1/2-m) = (-2)^m/(2m-1)!!·√π.
    """
    k = as_fraction(k)
    if k.denominator != 2:
        raise DomainError(ExactCfg.GAMMA_HALF_INTEGER_ERROR.format(k=k))
    n = k - Fraction(1, 2)
    n = int(n)
    if n >= 0:
        coeff = double_factorial(2 * n - 1) / 2**n
    else:
        m = -n
        coeff = Fraction((-2) ** m) / double_factorial(2 * m - 1)
    return PiHalfScalar(coeff, 1)
