"""
Модуль с суммированием вычетов подынтегрального выражения.

Возвращаемые значения относятся к голому интегралу
(1/2πi)·∫_{δ-i∞}^{δ+i∞}: замыкание влево даёт +Σ вычетов в левых
полюсах, вправо -Σ вычетов в правых.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log

import mpmath

from branes.algebra import vanishing_order
from core.constants import MellinBarnesCfg
from core.exceptions import DomainError
from mellin_barnes.gamma import gamma_pole_index, gamma_residue
from mellin_barnes.models import MBIntegrand, MBResult, Precision

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Pole:
    """
    Группа полюсов в одной точке.

    Поля:
    - location: Точка σ0.
    - gamma_order: Суммарный порядок полюсов гамма-множителей.
    - zero_order: Порядок нуля вставки.
    """

    location: Fraction
    gamma_order: int
    zero_order: int

    @property
    def order(self) -> int:
        return self.gamma_order - self.zero_order

    @property
    def removable(self) -> bool:
        return self.order <= 0


def conifold_modulus(ig: MBIntegrand) -> float:
    """∏|a_i|^{a_i}: граница |q| между левым и правым замыканием."""
    result = 1.0
    for a, _ in ig.gamma_factors:
        result *= float(abs(a)) ** float(a)
    return result


def _check_side(side: str) -> None:
    if side not in (MellinBarnesCfg.LEFT, MellinBarnesCfg.RIGHT):
        raise DomainError(MellinBarnesCfg.SIDE_ERROR.format(side=side))


def _side_factors(ig: MBIntegrand, side: str) -> list[tuple]:
    if side == MellinBarnesCfg.LEFT:
        return [(a, b) for a, b in ig.gamma_factors if a > 0]
    return [(a, b) for a, b in ig.gamma_factors if a < 0]


def pole_locations(
    ig: MBIntegrand, side: str, n_terms: int
) -> list[Fraction]:
    """Первые n_terms различных полюсов со стороны side, от контура."""
    _check_side(side)
    locations: set[Fraction] = set()
    for a, b in _side_factors(ig, side):
        for m in range((n_terms + 2) * int(abs(a)) + 1):
            locations.add((-m - b) / a)
    ordered = sorted(locations, reverse=side == MellinBarnesCfg.LEFT)
    return ordered[:n_terms]


def classify_pole(ig: MBIntegrand, location: Fraction) -> Pole:
    gamma_order = sum(
        gamma_pole_index(a, b, location) is not None
        for a, b in ig.gamma_factors
    )
    zero_order = (
        vanishing_order(ig.insertion, location)
        if gamma_order and not ig.insertion.is_zero()
        else 0
    )
    return Pole(location, gamma_order, zero_order)


def cauchy_residue(
    ig: MBIntegrand, sigma0: Fraction, prec: Precision
) -> mpmath.mpc:
    """
    Вычет по окружности радиуса 2^{-bits/4} вокруг σ0.

    Правило трапеций на окружности с не менее чем 64 узлами; рабочая
    точность увеличена на потерю от роста значений вблизи полюса и от
    сокращения в нуле вставки.
    """
    pole = classify_pole(ig, Fraction(sigma0))
    nodes = max(
        MellinBarnesCfg.CAUCHY_NODES,
        MellinBarnesCfg.CAUCHY_NODES_PER_ORDER * pole.gamma_order,
    )
    extra = (pole.gamma_order + pole.zero_order) * prec.bits // 4
    with mpmath.workprec(prec.bits + extra + MellinBarnesCfg.GUARD_BITS):
        radius = mpmath.ldexp(1, -(prec.bits // 4))
        center = mpmath.mpf(sigma0.numerator) / sigma0.denominator
        total = mpmath.mpc(0)
        for k in range(nodes):
            point = radius * mpmath.expjpi(mpmath.mpf(2 * k) / nodes)
            total += ig(center + point) * point
        result = total / nodes
    return prec.rounded(result)


def simple_residue(
    ig: MBIntegrand, location: Fraction, prec: Precision
) -> mpmath.mpc:
    """Вычет в простом полюсе одного гамма-множителя в замкнутом виде."""
    with mpmath.workprec(prec.bits + MellinBarnesCfg.GUARD_BITS):
        sigma = mpmath.mpf(location.numerator) / location.denominator
        for index, (a, b) in enumerate(ig.gamma_factors):
            m = gamma_pole_index(a, b, location)
            if m is not None:
                residue = gamma_residue(a, b, m)
                value = (
                    mpmath.mpf(residue.numerator)
                    / residue.denominator
                    * ig.gamma_product(sigma, skip=index)
                    * ig.kernel(sigma)
                )
                return prec.rounded(value)
    raise DomainError(
        MellinBarnesCfg.NOT_A_POLE_ERROR.format(location=location)
    )


def residue_at(
    ig: MBIntegrand, location: Fraction, prec: Precision
) -> mpmath.mpc:
    pole = classify_pole(ig, location)
    if pole.removable:
        return mpmath.mpc(0)
    if pole.gamma_order == 1 and pole.zero_order == 0:
        return simple_residue(ig, location, prec)
    return cauchy_residue(ig, location, prec)


def residue_terms(
    ig: MBIntegrand, side: str, n_terms: int, prec: Precision
) -> list[tuple[Fraction, mpmath.mpc]]:
    """Пары (σ0, вычет) для первых n_terms групп полюсов."""
    return [
        (location, residue_at(ig, location, prec))
        for location in pole_locations(ig, side, n_terms)
    ]


def poles_per_unit(ig: MBIntegrand, side: str) -> int:
    """Число различных полюсов на единичном отрезке со стороны side."""
    residues = {
        ((-m - b) / a) % 1
        for a, b in _side_factors(ig, side)
        for m in range(int(abs(a)))
    }
    return max(1, len(residues))


def default_terms(ig: MBIntegrand, side: str, prec: Precision) -> int:
    """
    Число групп полюсов для точности prec.

    Члены убывают как (|q|/q_c)^{±σ}; на единицу σ приходится
    poles_per_unit групп.
    """
    ratio = abs(complex(ig.q_value)) / conifold_modulus(ig)
    if ratio == 1:
        return MellinBarnesCfg.MAX_TERMS
    units = prec.bits * log(2) / abs(log(ratio))
    terms = ceil(units * poles_per_unit(ig, side)) + (
        MellinBarnesCfg.TERMS_MARGIN
    )
    return min(terms, MellinBarnesCfg.MAX_TERMS)


def residue_sum(
    ig: MBIntegrand,
    side: str,
    n_terms: int | None = None,
    prec: Precision | None = None,
) -> MBResult:
    """
    Сумма вычетов в первых n_terms группах полюсов со стороны side.

    Левое замыкание сходится при |q| меньше conifold_modulus, правое -
    при большем. Несоответствие стороны режиму |q| сопровождается
    предупреждением с отношением последних членов.
    """
    _check_side(side)
    prec = prec or Precision()
    n_terms = n_terms or default_terms(ig, side, prec)
    modulus = abs(complex(ig.q_value))
    threshold = conifold_modulus(ig)
    if (side == MellinBarnesCfg.LEFT) != (modulus < threshold):
        logger.warning(
            MellinBarnesCfg.REGIME_WARNING.format(
                side=side, q=modulus, threshold=threshold
            )
        )
    terms = residue_terms(ig, side, n_terms, prec)
    sign = 1 if side == MellinBarnesCfg.LEFT else -1
    with mpmath.workprec(prec.bits + MellinBarnesCfg.GUARD_BITS):
        values = [value for _, value in terms]
        total = mpmath.fsum(values) * sign
        nonzero = [abs(value) for value in values if value != 0]
    est_error = nonzero[-1] if nonzero else mpmath.mpf(0)
    if len(nonzero) >= 2 and nonzero[-1] > nonzero[-2]:
        logger.warning(
            MellinBarnesCfg.RATIO_WARNING.format(
                side=side, ratio=nonzero[-1] / nonzero[-2]
            )
        )
    logger.debug(
        MellinBarnesCfg.RESIDUE_LOG.format(
            side=side, terms=n_terms, nonzero=len(nonzero)
        )
    )
    return MBResult(
        prec.rounded(total),
        prec.rounded(est_error),
        MellinBarnesCfg.RESIDUES,
        n_terms,
    )
