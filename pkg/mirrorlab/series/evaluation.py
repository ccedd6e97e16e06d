"""Модуль для численного суммирования рядов в заданной точке."""

from __future__ import annotations

from typing import Union

import mpmath

from series.models import PuiseuxLogSeries, PuiseuxSeries


def evaluate(
    series: Union[PuiseuxSeries, PuiseuxLogSeries],
    x: object,
    bits: int,
    log_x: object = None,
) -> mpmath.mpc:
    """
    Частичная сумма ряда в точке x.

    Степени берутся как x^e = exp(e·log x) с главной ветвью логарифма,
    если log_x не передан явно; логарифмические части входят с весом
    (log x)^j/j!.

    Параметры:
        series: Ряд без логарифмов или с логарифмами.
        x: Комплексная точка.
        bits: Рабочая точность в битах.
        log_x: Необязательное значение log x (выбор ветви).

    Возвращает:
        mpmath.mpc: Значение частичной суммы.
    """
    if isinstance(series, PuiseuxSeries):
        series = PuiseuxLogSeries([series])
    with mpmath.workprec(bits):
        log_value = mpmath.log(x) if log_x is None else mpmath.mpc(log_x)
        total = mpmath.mpc(0)
        log_weight = mpmath.mpc(1)
        for j, part in enumerate(series.log_parts):
            if j:
                log_weight = log_weight * log_value / j
            terms = [
                mpmath.mpf(coeff.numerator)
                / coeff.denominator
                * mpmath.exp(
                    mpmath.mpf(exponent.numerator)
                    / exponent.denominator
                    * log_value
                )
                for exponent, coeff in part
            ]
            total += log_weight * mpmath.fsum(terms)
        return total
