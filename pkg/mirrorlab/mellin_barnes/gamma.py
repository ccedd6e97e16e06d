"""
Модуль с гамма-функцией произвольной точности.

Используется приближение Спужа с параметром, выбранным по текущей
точности mpmath, и формула отражения при Re z < 1/2.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import ceil, log, pi

import mpmath

from core.constants import MellinBarnesCfg
from core.exceptions import PoleError
from exact.scalars import factorial

logger = logging.getLogger(__name__)


def spouge_parameter(bits: int) -> int:
    """
    Параметр a приближения Спужа.

    Относительная погрешность не превосходит a^{-1/2}·(2π)^{-(a+1/2)},
    поэтому a ≈ bits·ln 2 / ln(2π) + 1.
    """
    return ceil(bits * log(2) / log(2 * pi)) + 1


@lru_cache(maxsize=None)
def spouge_coefficients(bits: int) -> tuple[int, tuple[mpmath.mpf, ...]]:
    """Коэффициенты c_0..c_{a-1}, вычисленные с двойным запасом точности."""
    a = spouge_parameter(bits)
    with mpmath.workprec(2 * bits + MellinBarnesCfg.GUARD_BITS):
        coefficients = [mpmath.sqrt(2 * mpmath.pi)]
        for k in range(1, a):
            sign = 1 if k % 2 else -1
            coefficients.append(
                sign
                * mpmath.power(a - k, k - mpmath.mpf(1) / 2)
                * mpmath.exp(a - k)
                / mpmath.factorial(k - 1)
            )
    logger.debug(MellinBarnesCfg.SPOUGE_LOG.format(bits=bits, a=a))
    return a, tuple(coefficients)


def _pole(z: mpmath.mpc) -> int | None:
    if mpmath.im(z) == 0 and mpmath.re(z) <= 0:
        real = mpmath.re(z)
        if real == mpmath.floor(real):
            return int(real)
    return None


def _spouge(z: object, bits: int) -> object:
    a, coefficients = spouge_coefficients(bits)
    with mpmath.workprec(2 * bits + MellinBarnesCfg.GUARD_BITS):
        w = z - 1
        total = coefficients[0]
        for k in range(1, a):
            total += coefficients[k] / (w + k)
        return (
            mpmath.power(w + a, w + mpmath.mpf(1) / 2)
            * mpmath.exp(-(w + a))
            * total
        )


def gamma_numeric(z: object, bits: int | None = None) -> object:
    """
    Γ(z) с относительной погрешностью порядка 2^{-bits+8}.

    Параметры:
        z: Комплексный или вещественный аргумент.
        bits: Точность; по умолчанию текущая точность mpmath.

    Возвращает:
        Значение, округлённое до bits бит.
    """
    bits = mpmath.mp.prec if bits is None else bits
    z = mpmath.mpmathify(z)
    pole = _pole(z)
    if pole is not None:
        raise PoleError(MellinBarnesCfg.POLE_ERROR.format(pole=pole), pole)
    with mpmath.workprec(bits + MellinBarnesCfg.GUARD_BITS):
        if mpmath.re(z) < mpmath.mpf(1) / 2:
            result = mpmath.pi / (
                mpmath.sinpi(z) * _spouge(1 - z, bits)
            )
        else:
            result = _spouge(z, bits)
    with mpmath.workprec(bits):
        return +result


def gamma_residue(a: Fraction, b: Fraction, m: int) -> Fraction:
    """
    Вычет Γ(a·σ + b) в полюсе σ = (-m - b)/a.

    Γ(x) имеет в x = -m вычет (-1)^m/m!, а замена x = a·σ + b делит его
    на a.
    """
    return Fraction((-1) ** m) / (factorial(m) * Fraction(a))


def gamma_pole_index(a: Fraction, b: Fraction, sigma: Fraction) -> int | None:
    """m, если a·σ + b = -m - неположительное целое, иначе None."""
    x = Fraction(a) * sigma + Fraction(b)
    if x <= 0 and x.denominator == 1:
        return int(-x)
    return None
