"""
Модуль с таблицей нормировочных констант.

Центральный заряд браны Уолчера складывается из множителей таблицы:
Z = sign·pairing·Ch(-1)·μ(Bμ_2)·Γ(1/2)^6·T^CY/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from branes.models import extended_walcher
from core.constants import NormalizationCfg
from exact.scalars import PiHalfScalar, gamma_half_integer


@dataclass(frozen=True)
class NormalizationFactor:
    """
    Элемент таблицы.

    Поля:
    - name: Имя множителя.
    - value: Точное значение c·π^{k/2}.
    - origin: Откуда берётся множитель.
    """

    name: str
    value: PiHalfScalar
    origin: str

    def numeric(self) -> mpmath.mpf:
        return mpmath.mpf(self.value.coeff.numerator) / (
            self.value.coeff.denominator
        ) * mpmath.pi ** (mpmath.mpf(self.value.half_pi_power) / 2)


def _walcher_at_minus_one() -> Fraction:
    return Fraction(extended_walcher().char.evaluate(Fraction(-1)))


def normalization_table() -> list[NormalizationFactor]:
    """Все множители с пояснениями."""
    return [
        NormalizationFactor(
            NormalizationCfg.HEMISPHERE_SIGN,
            PiHalfScalar(Fraction(NormalizationCfg.SIGN)),
            NormalizationCfg.HEMISPHERE_SIGN_ORIGIN,
        ),
        NormalizationFactor(
            NormalizationCfg.PAIRING_PREFACTOR,
            PiHalfScalar(Fraction(NormalizationCfg.PAIRING)),
            NormalizationCfg.PAIRING_PREFACTOR_ORIGIN,
        ),
        NormalizationFactor(
            NormalizationCfg.KOSZUL_HALF_INTEGER,
            PiHalfScalar(_walcher_at_minus_one()),
            NormalizationCfg.KOSZUL_HALF_INTEGER_ORIGIN,
        ),
        NormalizationFactor(
            NormalizationCfg.BMU2_MEASURE,
            PiHalfScalar(NormalizationCfg.GROUPOID_MEASURE),
            NormalizationCfg.BMU2_MEASURE_ORIGIN,
        ),
        NormalizationFactor(
            NormalizationCfg.GAMMA_HALF_SIXTH,
            gamma_half_integer(Fraction(1, 2)) ** 6,
            NormalizationCfg.GAMMA_HALF_SIXTH_ORIGIN,
        ),
        NormalizationFactor(
            NormalizationCfg.DISK_SERIES,
            PiHalfScalar(1 / Fraction(NormalizationCfg.DISK_SERIES_FACTOR)),
            NormalizationCfg.DISK_SERIES_ORIGIN,
        ),
        NormalizationFactor(
            NormalizationCfg.TC_PREFACTOR,
            PiHalfScalar(Fraction(NormalizationCfg.TC_COEFF), 4),
            NormalizationCfg.TC_PREFACTOR_ORIGIN,
        ),
    ]


def _factor(name: str) -> PiHalfScalar:
    for entry in normalization_table():
        if entry.name == name:
            return entry.value
    raise KeyError(name)


def open_closed_scalar() -> PiHalfScalar:
    """Точное значение 64π^3."""
    result = PiHalfScalar(Fraction(1))
    for name in NormalizationCfg.OPEN_CLOSED_CHAIN:
        result = result * _factor(name)
    return result


def quintic_tc_scalar() -> PiHalfScalar:
    """Точное значение -32π^2."""
    return _factor(NormalizationCfg.HEMISPHERE_SIGN) * _factor(
        NormalizationCfg.TC_PREFACTOR
    )


def _numeric(scalar: PiHalfScalar) -> mpmath.mpf:
    return NormalizationFactor("", scalar, "").numeric()


def open_closed_factor() -> mpmath.mpf:
    """Z(Уолчер) = open_closed_factor()·T^CY(q)."""
    return _numeric(open_closed_scalar())


def quintic_tc_factor() -> mpmath.mpf:
    """Z(𝔅_c) при arg q = π равно quintic_tc_factor()·Σ c_m·I^LG_{m-1}."""
    return _numeric(quintic_tc_scalar())


def hemisphere_sign() -> mpmath.mpf:
    """Общий знак перед голым интегралом."""
    return _numeric(_factor(NormalizationCfg.HEMISPHERE_SIGN))
