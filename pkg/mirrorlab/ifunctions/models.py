"""Модуль с моделью I-функции расширенной GLSM в обеих фазах."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from core.constants import IFunctionCfg
from core.exceptions import DomainError
from exact.scalars import Rational
from ifunctions.generators import i_cy, i_lg, t_cy, t_lg
from series.models import PuiseuxLogSeries, PuiseuxSeries

AnySeries = Union[PuiseuxSeries, PuiseuxLogSeries]


@dataclass(frozen=True)
class ExtendedIFunction:
    """
    I-функция расширенной модели, разложенная по секторам.

    Поля:
    - phase: "positive" (CY) или "negative" (LG).
    - sectors: Отображение метка сектора -> ряд при соответствующем
    классе; сектор p (p_-) несёт дисковый потенциал.
    - pairing: Спаривание (p, 1_3), мера группоида Bμ_2.
    """

    phase: str
    sectors: dict[str, AnySeries] = field(default_factory=dict)
    pairing: Fraction = IFunctionCfg.P_PAIRING

    @property
    def disk_label(self) -> str:
        if self.phase == IFunctionCfg.POSITIVE_PHASE:
            return IFunctionCfg.P_SECTOR
        return IFunctionCfg.P_MINUS_SECTOR

    @property
    def unit_label(self) -> str:
        if self.phase == IFunctionCfg.POSITIVE_PHASE:
            return IFunctionCfg.CY_SECTOR.format(k=0)
        return IFunctionCfg.LG_SECTOR.format(k=0)

    def sector(self, label: str) -> AnySeries:
        try:
            return self.sectors[label]
        except KeyError as error:
            raise DomainError(
                IFunctionCfg.SECTOR_ERROR.format(
                    label=label, phase=self.phase
                )
            ) from error

    def disk_component(self) -> AnySeries:
        """Спаривание дискового сектора с 1_3: pairing·(-2T) = -T."""
        return self.sector(self.disk_label).scale(self.pairing)


def extended_i_function(phase: str, order: Rational) -> ExtendedIFunction:
    """
    Строит I-функцию расширенной модели в заданной фазе.

    В положительной фазе сектора e·H^k равны I^CY_k, сектор p равен
    -2·T^CY. В отрицательной фазе сектора phi_k равны ε_k·I^LG_k с
    ε = (1, 1, -1, -1), а сектор p_- равен -2·T^LG в переменной t.
    """
    if phase == IFunctionCfg.POSITIVE_PHASE:
        sectors: dict[str, AnySeries] = {
            IFunctionCfg.CY_SECTOR.format(k=k): i_cy(k, order)
            for k in range(IFunctionCfg.COMPONENTS)
        }
        sectors[IFunctionCfg.P_SECTOR] = t_cy(order).scale(-2)
    elif phase == IFunctionCfg.NEGATIVE_PHASE:
        sectors = {
            IFunctionCfg.LG_SECTOR.format(k=k): i_lg(k, order).scale(sign)
            for k, sign in enumerate(IFunctionCfg.LG_SIGNS)
        }
        sectors[IFunctionCfg.P_MINUS_SECTOR] = t_lg(order).scale(-2)
    else:
        raise DomainError(IFunctionCfg.PHASE_ERROR.format(phase=phase))
    return ExtendedIFunction(phase, sectors)
