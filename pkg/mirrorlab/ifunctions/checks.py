"""Модуль с точными проверками уравнений Пикара-Фукса на I-функциях."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from core.constants import IFunctionCfg, PicardFuchsCfg
from core.exceptions import DomainError
from exact.scalars import Rational, as_fraction
from ifunctions.generators import i_cy, i_lg, t_cy, t_lg
from picard_fuchs.models import ThetaOperator, apply
from picard_fuchs.operators import extended_pf, lg_pf, pf_L
from series.models import PuiseuxLogSeries, PuiseuxSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidualCheck:
    """
    Результат применения оператора к ряду.

    Поля:
    - label: Название проверяемого ряда.
    - residual: Образ минус ожидаемая правая часть.
    - order: Порядок, до которого образ достоверен.
    """

    label: str
    residual: PuiseuxLogSeries
    order: Fraction | None

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()


def pf_residual(
    operator: ThetaOperator,
    series: PuiseuxSeries | PuiseuxLogSeries,
    expected: PuiseuxSeries | None = None,
    label: str = "",
) -> ResidualCheck:
    """Возвращает op(series) - expected с сохранением порядка усечения."""
    image = apply(operator, series)
    if expected is not None:
        image = image - PuiseuxLogSeries([expected.truncate(image.order)])
    return ResidualCheck(label, image, image.order)


def quintic_checks(order: Rational) -> list[ResidualCheck]:
    """L аннулирует I^CY_0..I^CY_3."""
    operator = pf_L()
    return [
        pf_residual(
            operator, i_cy(k, order), label=IFunctionCfg.I_CY_LABEL.format(k=k)
        )
        for k in range(IFunctionCfg.COMPONENTS)
    ]


def extended_checks(order: Rational) -> list[ResidualCheck]:
    """(2θ-1)∘L аннулирует I^CY_0..I^CY_3 и T^CY."""
    operator = extended_pf()
    checks = [
        pf_residual(
            operator, i_cy(k, order), label=IFunctionCfg.I_CY_LABEL.format(k=k)
        )
        for k in range(IFunctionCfg.COMPONENTS)
    ]
    checks.append(
        pf_residual(operator, t_cy(order), label=IFunctionCfg.T_CY_LABEL)
    )
    return checks


def lg_checks(order: Rational) -> list[ResidualCheck]:
    """Оператор LG-фазы аннулирует I^LG_0..I^LG_3."""
    operator = lg_pf()
    return [
        pf_residual(
            operator, i_lg(k, order), label=IFunctionCfg.I_LG_LABEL.format(k=k)
        )
        for k in range(IFunctionCfg.COMPONENTS)
    ]


def inhomogeneous_checks(order: Rational) -> list[ResidualCheck]:
    """
    Неоднородные уравнения для дисковых потенциалов.

    L·T^CY = (15/8)·q^{1/2}; в переменной t (q = t^{-5}) образ T^LG под
    оператором LG-фазы равен (9375/8)·t^{-5/2}.
    """
    order = as_fraction(order)
    return [
        pf_residual(
            pf_L(),
            t_cy(order),
            PuiseuxSeries.monomial(
                Fraction(1, 2), PicardFuchsCfg.CY_INHOMOGENEITY
            ),
            IFunctionCfg.T_CY_LABEL,
        ),
        pf_residual(
            lg_pf(),
            t_lg(order),
            PuiseuxSeries.monomial(
                Fraction(-5, 2), PicardFuchsCfg.LG_INHOMOGENEITY
            ),
            IFunctionCfg.T_LG_LABEL,
        ),
    ]


PF_CHECKS: dict[str, Callable[[Rational], list[ResidualCheck]]] = {
    IFunctionCfg.QUINTIC: quintic_checks,
    IFunctionCfg.EXTENDED: extended_checks,
    IFunctionCfg.LG: lg_checks,
    IFunctionCfg.INHOMOGENEOUS: inhomogeneous_checks,
}


def run_pf_checks(kind: str, order: Rational) -> list[ResidualCheck]:
    try:
        runner = PF_CHECKS[kind]
    except KeyError as error:
        raise DomainError(
            IFunctionCfg.PF_CHECK_KIND_ERROR.format(kind=kind)
        ) from error
    checks = runner(order)
    logger.debug(
        IFunctionCfg.PF_CHECK_LOG.format(
            kind=kind,
            passed=sum(check.passed for check in checks),
            total=len(checks),
        )
    )
    return checks
