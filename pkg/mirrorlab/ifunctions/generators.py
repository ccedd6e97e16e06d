"""
Модуль с генераторами I-функций и дисковых потенциалов квинтики.

Все ряды строятся по замкнутым формулам в точной арифметике. Компонента
k CY-функции равна коэффициенту при H^k в e^{(log q)H}·Σ q^d A_d(H) по
модулю H^4, где A_d(H) = Π_{m=1}^{5d}(5H+m)/Π_{m=1}^{d}(H+m)^5.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache

from core.constants import IFunctionCfg
from core.exceptions import DomainError
from exact.scalars import (
    Rational,
    as_fraction,
    double_factorial,
    factorial,
    gamma_half_integer,
    pochhammer,
)
from series.models import PuiseuxLogSeries, PuiseuxSeries

logger = logging.getLogger(__name__)

H_DEPTH = IFunctionCfg.COMPONENTS


def _truncated_product(
    left: list[Fraction], right: list[Fraction]
) -> list[Fraction]:
    result = [Fraction(0)] * H_DEPTH
    for i, a in enumerate(left):
        if not a:
            continue
        for j in range(H_DEPTH - i):
            result[i + j] += a * right[j]
    return result


def _linear(constant: Rational, slope: Rational) -> list[Fraction]:
    return [as_fraction(constant), as_fraction(slope)] + [Fraction(0)] * (
        H_DEPTH - 2
    )


def _inverse_linear(constant: Rational, slope: Rational) -> list[Fraction]:
    """1/(c + s·H) по модулю H^4."""
    constant, slope = as_fraction(constant), as_fraction(slope)
    ratio = -slope / constant
    return [ratio**j / constant for j in range(H_DEPTH)]


@lru_cache(maxsize=None)
def hypergeometric_coefficient(d: int) -> tuple[Fraction, ...]:
    """
    Коэффициенты A_d(H) по степеням H до H^3.

    Параметры:
        d: Неотрицательная степень по q.

    Возвращает:
        tuple: (a_0, a_1, a_2, a_3), a_0 = (5d)!/(d!)^5.
    """
    if d < 0:
        raise DomainError(IFunctionCfg.DEGREE_ERROR.format(d=d))
    if d == 0:
        return (Fraction(1),) + (Fraction(0),) * (H_DEPTH - 1)
    result = list(hypergeometric_coefficient(d - 1))
    for m in range(5 * d - 4, 5 * d + 1):
        result = _truncated_product(result, _linear(m, 5))
    denominator = _inverse_linear(d, 1)
    for _ in range(5):
        result = _truncated_product(result, denominator)
    return tuple(result)


def _check_component(k: int) -> None:
    if not 0 <= k < H_DEPTH:
        raise DomainError(IFunctionCfg.COMPONENT_ERROR.format(k=k))


def i_cy(k: int, order: Rational) -> PuiseuxLogSeries:
    """
    Компонента I^CY_k с логарифмическими частями.

    Часть j (множитель (log q)^j/j!) равна Σ_d q^d·[H^{k-j}]A_d(H).
    """
    _check_component(k)
    order = as_fraction(order)
    parts = []
    for j in range(k + 1):
        coefficients = {}
        d = 0
        while d < order:
            coefficients[d] = hypergeometric_coefficient(d)[k - j]
            d += 1
        parts.append(PuiseuxSeries(coefficients, order))
    return PuiseuxLogSeries(parts)


def i_lg(k: int, order: Rational) -> PuiseuxSeries:
    """
    Компонента I^LG_k при φ_k/z^k в переменной t.

    I^LG_k = Σ_l t^{5l+k+1}/(5l+k)!·((k+1)/5)_l^5, показатели лежат в
    классе k+1 по модулю 5.
    """
    _check_component(k)
    order = as_fraction(order)
    coefficients = {}
    base = Fraction(k + 1, 5)
    level = 0
    while 5 * level + k + 1 < order:
        exponent = 5 * level + k + 1
        coefficients[exponent] = (
            pochhammer(base, level) ** 5 / factorial(5 * level + k)
        )
        level += 1
    return PuiseuxSeries(coefficients, order)


def t_cy(order: Rational) -> PuiseuxSeries:
    """T^CY = 2·Σ_{d нечётн.} (5d)!!/(d!!)^5·q^{d/2}."""
    order = as_fraction(order)
    coefficients = {}
    d = 1
    while Fraction(d, 2) < order:
        coefficients[Fraction(d, 2)] = (
            2 * double_factorial(5 * d) / double_factorial(d) ** 5
        )
        d += 2
    return PuiseuxSeries(coefficients, order)


def t_lg(
    order: Rational, variable: str = IFunctionCfg.T_VARIABLE
) -> PuiseuxSeries:
    """
    T^LG = -2·Σ_{d нечётн.} (d!!)^5/(d^5·(5d-2)!!)·q^{-d/2}.

    Параметры:
        order: Порядок усечения по t (q = t^{-5}, q^{-d/2} = t^{5d/2}).
        variable: "t" для ряда по t или "q" для точного многочлена по
        q^{-1/2} с теми же членами.
    """
    order = as_fraction(order)
    coefficients = {}
    d = 1
    while Fraction(5 * d, 2) < order:
        coefficients[Fraction(5 * d, 2)] = (
            -2
            * double_factorial(d) ** 5
            / (d**5 * double_factorial(5 * d - 2))
        )
        d += 2
    series = PuiseuxSeries(coefficients, order)
    if variable == IFunctionCfg.Q_VARIABLE:
        return series.reflect_exponents(Fraction(-1, 5))
    if variable != IFunctionCfg.T_VARIABLE:
        raise DomainError(
            IFunctionCfg.VARIABLE_ERROR.format(variable=variable)
        )
    return series


def t_lg_gamma_quotient(order: Rational) -> PuiseuxSeries:
    """
    T^LG по формуле с отношениями гамма-функций в полуцелых точках.

    -2/3·Σ_m Γ(-3/2-5m)/Γ(-3/2)·Γ(1/2)^5/Γ(1/2-m)^5·t^{5m+5/2}.
    """
    order = as_fraction(order)
    coefficients = {}
    m = 0
    while 5 * m + Fraction(5, 2) < order:
        numerator = gamma_half_integer(Fraction(-3, 2) - 5 * m) * (
            gamma_half_integer(Fraction(1, 2)) ** 5
        )
        denominator = gamma_half_integer(Fraction(1, 2) - m) ** 5 * (
            gamma_half_integer(Fraction(-3, 2))
        )
        ratio = (numerator / denominator).coeff
        coefficients[5 * m + Fraction(5, 2)] = Fraction(-2, 3) * ratio
        m += 1
    logger.debug(
        IFunctionCfg.GAMMA_QUOTIENT_LOG.format(terms=len(coefficients))
    )
    return PuiseuxSeries(coefficients, order)
