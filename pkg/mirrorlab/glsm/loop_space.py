"""Модуль с размерностями пространств LG-петель и препятствующих расслоений."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import floor

from core.constants import GlsmCfg
from core.exceptions import DomainError
from exact.scalars import Rational, as_fraction
from glsm.models import GlsmCharges, LoopSpaceData
from glsm.phases import stable_coordinates, torsion_order

logger = logging.getLogger(__name__)


def h0(x: Fraction) -> int:
    """dim H^0(P^1, O(x)) = max(0, ⌊x⌋ + 1) для рационального x."""
    return max(0, floor(x) + 1)


def h1(x: Fraction) -> int:
    """dim H^1(P^1, O(x)) = max(0, -⌊x⌋ - 1)."""
    return max(0, -floor(x) - 1)


def section_degrees(charges: GlsmCharges, d: Rational) -> list[Fraction]:
    """Степени ⟨D_i, d⟩ - q_i/2 линейных расслоений на P^1."""
    d = as_fraction(d)
    return [
        coord.weight * d - coord.r_charge / 2 for coord in charges.coords
    ]


def loop_space_data(
    charges: GlsmCharges, zeta_sign: int, d: Rational
) -> LoopSpaceData:
    """
    Размерности L_d = [(V_d - 0)/G] и препятствующего расслоения E_d.

    Параметры:
        charges: Таблица зарядов.
        zeta_sign: Знак параметра устойчивости.
        d: Степень петли.

    Возвращает:
        LoopSpaceData: dim V_d, dim W_d, dim L_d, rank E_d и виртуальная
        размерность.
    """
    d = as_fraction(d)
    degrees = section_degrees(charges, d)
    dim_v = sum(h0(x) for x in degrees)
    dim_w = sum(h1(x) for x in degrees)
    if not dim_v or not is_effective(charges, zeta_sign, d):
        raise DomainError(
            GlsmCfg.NOT_EFFECTIVE_ERROR.format(
                degree=d, model=charges.name, zeta=zeta_sign
            )
        )
    dim_l = dim_v - 1
    data = LoopSpaceData(
        degree=d,
        dim_V=dim_v,
        dim_W=dim_w,
        dim_L=dim_l,
        rank_E=dim_w,
        virtual_dim=dim_l - dim_w,
    )
    logger.debug(GlsmCfg.LOOP_SPACE_LOG.format(data=data))
    return data


def is_effective(charges: GlsmCharges, zeta_sign: int, d: Rational) -> bool:
    """
    Степень эффективна, если для некоторой координаты из минимального
    антиконуса ⟨D_i, d⟩ - q_i/2 является неотрицательным целым.
    """
    degrees = section_degrees(charges, d)
    return any(
        degrees[index - 1] >= 0 and degrees[index - 1].denominator == 1
        for index in stable_coordinates(charges, zeta_sign)
    )


def effective_degrees(
    charges: GlsmCharges, zeta_sign: int, count: int
) -> list[Fraction]:
    """
    Первые count эффективных степеней фазы по возрастанию |d|.

    Степени перебираются на решётке (1/N)Z, N = torsion_order.
    """
    step = Fraction(zeta_sign, torsion_order(charges))
    limit = count * torsion_order(charges)
    candidates = (k * step for k in range(limit + 1))
    return [
        d for d in candidates if is_effective(charges, zeta_sign, d)
    ][:count]
