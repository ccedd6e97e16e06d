"""
Модуль с коэффициентами аналитического продолжения дискового потенциала.

После пересечения стены T^CY переходит в T^LG плюс линейную комбинацию
I^LG_0..I^LG_3. Коэффициенты комбинации трансцендентны, поэтому они
вычисляются численно с заданной точностью.
"""

from __future__ import annotations

import logging

import mpmath

from core.constants import IFunctionCfg
from core.exceptions import DomainError
from exact.scalars import Rational
from ifunctions.generators import i_lg, t_lg
from mellin_barnes.gamma import gamma_numeric
from series.evaluation import evaluate

logger = logging.getLogger(__name__)


def t_c_coefficients(precision_bits: int) -> list[mpmath.mpc]:
    """
    Коэффициенты c_m, m = 1..4, разложения T_c = Σ c_m·I^LG_{m-1}(t).

    c_m = -i·(π^3/10)·e^{4πim/5}/(Γ(1-m/5)^5·cos(πm/5)).
    """
    if precision_bits < IFunctionCfg.MIN_BITS:
        raise DomainError(
            IFunctionCfg.PRECISION_ERROR.format(
                bits=precision_bits, minimum=IFunctionCfg.MIN_BITS
            )
        )
    with mpmath.workprec(precision_bits):
        prefactor = -mpmath.j * mpmath.pi**3 / 10
        coefficients = []
        for m in range(1, 5):
            fraction = mpmath.mpf(m) / 5
            phase = mpmath.expjpi(4 * fraction)
            denominator = gamma_numeric(
                1 - fraction, precision_bits
            ) ** 5 * mpmath.cospi(fraction)
            coefficients.append(prefactor * phase / denominator)
    return coefficients


def wallcross_coefficients(
    precision_bits: int, convention: str = IFunctionCfg.PRINCIPAL
) -> list[mpmath.mpc]:
    """
    Коэффициенты w_m продолжения брана Уолчера через стену.

    Продолжение правым замыканием равно 64π^3·(T^LG + Σ w_m·I^LG_{m-1}).
    При главной ветви и знаке минус в определении полусферной функции
    w_m = -c_m; соглашение "conjugate" отвечает обходу через нижнюю
    полуплоскость и даёт -conj(c_m).
    """
    coefficients = t_c_coefficients(precision_bits)
    if convention == IFunctionCfg.PRINCIPAL:
        return [-c for c in coefficients]
    if convention == IFunctionCfg.CONJUGATE:
        return [-mpmath.conj(c) for c in coefficients]
    raise DomainError(
        IFunctionCfg.CONVENTION_ERROR.format(convention=convention)
    )


def lg_continuation_value(
    t: object,
    precision_bits: int,
    convention: str = IFunctionCfg.PRINCIPAL,
    order: Rational = IFunctionCfg.CONTINUATION_ORDER,
) -> mpmath.mpc:
    """
    Численное значение T^LG(t) + Σ w_m·I^LG_{m-1}(t).

    Параметры:
        t: Точка на стороне LG (|t| < 5 для сходимости рядов).
        precision_bits: Рабочая точность.
        convention: Соглашение о ветви для w_m.
        order: Порядок усечения рядов по t.
    """
    weights = wallcross_coefficients(precision_bits, convention)
    with mpmath.workprec(precision_bits):
        total = evaluate(t_lg(order), t, precision_bits)
        for m, weight in enumerate(weights, start=1):
            total += weight * evaluate(i_lg(m - 1, order), t, precision_bits)
    logger.debug(
        IFunctionCfg.CONTINUATION_LOG.format(t=t, value=total, order=order)
    )
    return total
