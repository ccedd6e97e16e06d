"""
Модуль с операциями над K-классами: окна ограничения градуировки,
разложение для аналитического продолжения и вставка характера Черна.

Знак центрального заряда выбран противоположным соглашению, принятому
для матричных факторизаций в литературе; он учитывается в mellin_barnes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import mpmath

from branes.models import LaurentChar
from core.constants import BranesCfg
from core.exceptions import DecompositionError, DomainError
from exact.laurent import cyclotomic
from exact.scalars import Rational, as_fraction
from glsm.models import GlsmCharges

logger = logging.getLogger(__name__)

ONE_PLUS_INVERSE = LaurentChar({0: 1, -1: 1})
ONE_MINUS_FIFTH = LaurentChar({0: 1, -5: -1})


@dataclass(frozen=True)
class GradeRestrictionResult:
    """
    Результат проверки окна.

    Поля:
    - passed: Все показатели носителя лежат в окне.
    - violations: Показатели n с |B + n| ≥ half_width.
    """

    passed: bool
    violations: tuple[int, ...] = field(default_factory=tuple)


def window_half_width(charges: GlsmCharges) -> Fraction:
    """Полуширина окна (1/4)·Σ|D_i| для стены ζ = 0."""
    return Fraction(sum(abs(weight) for weight in charges.weights), 4)


def grade_restriction_check(
    char: LaurentChar, half_width: Rational, offset: Rational
) -> GradeRestrictionResult:
    """
    Проверяет |B + n| < half_width для всех n из носителя char.

    Параметры:
        char: K-класс браны.
        half_width: Полуширина окна, положительная.
        offset: Сдвиг B.
    """
    half_width = as_fraction(half_width)
    offset = as_fraction(offset)
    if half_width <= 0:
        raise DomainError(
            BranesCfg.HALF_WIDTH_ERROR.format(half_width=half_width)
        )
    violations = tuple(
        n for n in char.support() if abs(offset + n) >= half_width
    )
    if violations:
        logger.debug(
            BranesCfg.WINDOW_LOG.format(
                char=char, offset=offset, violations=violations
            )
        )
    return GradeRestrictionResult(not violations, violations)


def decompose_for_continuation(
    char: LaurentChar,
) -> tuple[LaurentChar, LaurentChar]:
    """
    Разложение char = f·(1 + T^{-1}) + g·(1 - T^{-5}).

    g = c·T^top выбирается так, чтобы char - g·(1 - T^{-5}) обращался в
    нуль при T = -1, то есть 2·g(-1) = char(-1); затем f находится точным
    делением на 1 + T^{-1}.

    Возвращает:
        tuple: Пара (f, g).
    """
    if char.is_zero():
        return LaurentChar(), LaurentChar()
    at_minus_one = char.evaluate(Fraction(-1))
    if at_minus_one % 2:
        raise DecompositionError(
            BranesCfg.DECOMPOSITION_PARITY_ERROR.format(
                char=char, value=at_minus_one
            ),
            at_minus_one,
        )
    top = char.max_exponent()
    coeff = int(at_minus_one / 2) * (-1) ** top
    g = LaurentChar.monomial(top, coeff)
    f, remainder = (char - g * ONE_MINUS_FIFTH).divide(ONE_PLUS_INVERSE)
    if not remainder.is_zero():
        raise DecompositionError(
            BranesCfg.DECOMPOSITION_ERROR.format(
                char=char, remainder=remainder
            ),
            remainder,
        )
    logger.debug(BranesCfg.DECOMPOSITION_LOG.format(char=char, f=f, g=g))
    return f, g


def char_insertion(char: LaurentChar) -> Callable[[object], mpmath.mpc]:
    """Функция σ ↦ Σ c_n·e^{2πi·n·σ} при текущей точности mpmath."""
    terms = list(char)

    def insertion(sigma: object) -> mpmath.mpc:
        sigma = mpmath.mpmathify(sigma)
        total = mpmath.mpc(0)
        for n, coeff in terms:
            total += coeff * mpmath.expjpi(2 * n * sigma)
        return total

    return insertion


def vanishing_order(char: LaurentChar, sigma0: Rational) -> int:
    """
    Порядок нуля e^{2πiσ}-многочлена в рациональной точке σ0.

    Точка T0 = e^{2πiσ0} является первообразным корнем степени m из
    единицы, m - знаменатель σ0, поэтому порядок равен кратности
    кругового многочлена Φ_m в char.
    """
    if char.is_zero():
        raise DomainError(BranesCfg.ZERO_CHAR_ORDER_ERROR)
    divisor = cyclotomic(as_fraction(sigma0).denominator)
    current = char
    order = 0
    while True:
        quotient, remainder = current.divide(divisor)
        if not remainder.is_zero():
            return order
        current = quotient
        order += 1
