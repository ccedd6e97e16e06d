"""Модуль с моделями K-классов бран."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from core.constants import BranesCfg
from core.exceptions import DomainError
from exact.laurent import LaurentPolynomial


class LaurentChar(LaurentPolynomial):
    """
    Класс Σ c_n·T^n в K_G(V) = Z[T^{±1}], T - фундаментальный характер.

    Характер Черна заменяет T^n на e^{2πi·n·σ}.
    """

    variable = BranesCfg.CHAR_VARIABLE


@dataclass(frozen=True)
class Brane:
    """
    Брана с выбранным окном.

    Поля:
    - char: K-класс.
    - offset: Сдвиг окна B в правиле ограничения градуировки.
    - label: Название браны.
    """

    char: LaurentChar
    offset: Fraction = Fraction(0)
    label: str = ""


def koszul_char(weights: list[int], twist: int = 0) -> LaurentChar:
    """
    K-класс матричной факторизации Кошуля: T^twist·∏(1 - T^{-w_i}).

    Параметры:
        weights: Веса координат, на которых факторизация точна.
        twist: Сдвиг на характер T^twist.
    """
    char = LaurentChar.monomial(twist)
    for weight in weights:
        char = char * LaurentChar({0: 1, -weight: -1})
    return char


def extended_walcher() -> Brane:
    return Brane(
        koszul_char([1] * 5, 2),
        Fraction(1, 2),
        BranesCfg.EXTENDED_WALCHER,
    )


def structure_sheaf() -> Brane:
    return Brane(LaurentChar.monomial(0), Fraction(0), BranesCfg.STRUCTURE)


def quintic_tc() -> Brane:
    """Брана 𝔅_c квинтики: -15T^2 + 10T - 10T^{-1} + 15T^{-2}."""
    return Brane(
        LaurentChar({2: -15, 1: 10, -1: -10, -2: 15}),
        Fraction(0),
        BranesCfg.QUINTIC_TC,
    )


def lg_disk() -> Brane:
    """Вклад g·(1 - T^{-5}) с g = 16T^2 из разложения браны Уолчера."""
    return Brane(
        LaurentChar({2: 16, -3: -16}),
        Fraction(1, 2),
        BranesCfg.LG_DISK,
    )


FIXTURES = {
    BranesCfg.EXTENDED_WALCHER: extended_walcher,
    BranesCfg.STRUCTURE: structure_sheaf,
    BranesCfg.QUINTIC_TC: quintic_tc,
    BranesCfg.LG_DISK: lg_disk,
}


def named_brane(name: str) -> Brane:
    try:
        return FIXTURES[name]()
    except KeyError as error:
        raise DomainError(
            BranesCfg.UNKNOWN_BRANE_ERROR.format(
                name=name, known=", ".join(sorted(FIXTURES))
            )
        ) from error
