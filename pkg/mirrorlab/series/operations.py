"""
Модуль с операциями над рядами Пюизё.

Кольцевые операции, обращение, экспонента, логарифм, композиция и
обращение композиции (для зеркальных отображений). Все вычисления точные,
порядок усечения каждого результата выводится из порядков аргументов.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import factorial, lcm
from typing import Union

from core.constants import SeriesCfg
from core.exceptions import DomainError
from exact.scalars import Rational, as_fraction
from series.models import (
    Order,
    PuiseuxLogSeries,
    PuiseuxSeries,
    add_order,
    min_order,
)

logger = logging.getLogger(__name__)

AnySeries = Union[PuiseuxSeries, PuiseuxLogSeries]


def _lattice(*values: Order) -> Fraction:
    denominators = [value.denominator for value in values if value is not None]
    return Fraction(1, lcm(1, *denominators))


def _require_order(order: Order) -> Fraction:
    if order is None:
        raise DomainError(SeriesCfg.ORDER_REQUIRED_ERROR)
    return order


def _relative(series: PuiseuxSeries) -> tuple[Fraction, Fraction, dict]:
    """Раскладывает ряд как c·x^v·(1 + h) и возвращает (v, c, h)."""
    valuation, coeff = series.leading_term()
    tail = {
        exponent - valuation: value / coeff
        for exponent, value in series
        if exponent != valuation
    }
    return valuation, coeff, tail


def theta_apply(series: AnySeries) -> AnySeries:
    """θ = x d/dx, применённый к ряду (с логарифмическими частями)."""
    return series.theta()


def add(left: AnySeries, right: AnySeries) -> AnySeries:
    return left + right


def mul(left: AnySeries, right: AnySeries) -> AnySeries:
    if isinstance(left, PuiseuxSeries) and isinstance(right, PuiseuxLogSeries):
        return right * left
    return left * right


def invert_series(
    series: PuiseuxSeries, order: Rational | None = None
) -> PuiseuxSeries:
    """
    Мультипликативно обращает ряд с ненулевым старшим членом.

    Параметры:
        series: Ряд c·x^v·(1 + h).
        order: Необязательная граница усечения результата; обязательна,
        если ряд точный и не является одночленом.

    Возвращает:
        PuiseuxSeries: Ряд c^{-1}·x^{-v}·(1 + h)^{-1}.
    """
    if series.is_zero():
        raise DomainError(SeriesCfg.INVERT_ZERO_ERROR)
    valuation, coeff, tail = _relative(series)
    order = None if order is None else as_fraction(order)
    target = min_order(add_order(series.order, -2 * valuation), order)
    if not tail and target is None:
        return PuiseuxSeries.monomial(
            -valuation, 1 / coeff, None, series.ramification
        )
    target = _require_order(target)
    relative_order = target + valuation
    step = _lattice(*tail, relative_order)
    result = {Fraction(0): Fraction(1)}
    k = step
    while k < relative_order:
        value = -sum(
            (c * result.get(k - e, 0) for e, c in tail.items() if e <= k),
            Fraction(0),
        )
        if value:
            result[k] = value
        k += step
    return PuiseuxSeries(
        {e - valuation: c / coeff for e, c in result.items()},
        target,
        lcm(series.ramification, target.denominator),
    )


def invert(series: AnySeries, order: Rational | None = None) -> AnySeries:
    """
    Обращает ряд; для рядов с логарифмами старший член обязан быть без log.

    1/(a0 + N) = a0^{-1}·Σ(-N/a0)^k; нормирование N/a0 положительно,
    поэтому сумма обрывается на порядке усечения. Если логарифмический
    ранг результата больше трёх, поднимается DomainError.
    """
    if isinstance(series, PuiseuxSeries):
        return invert_series(series, order)
    head = series.part(0)
    if head.is_zero():
        raise DomainError(SeriesCfg.INVERT_LOG_LEADING_ERROR)
    head_valuation = head.valuation()
    for part in series.log_parts[1:]:
        if not part.is_zero() and part.valuation() <= head_valuation:
            raise DomainError(SeriesCfg.INVERT_LOG_LEADING_ERROR)
    limit = _require_order(order if order is not None else series.order)
    inverse_head = PuiseuxLogSeries([invert_series(head, limit)])
    nilpotent = PuiseuxLogSeries(
        [PuiseuxSeries.zero(series.order)] + list(series.log_parts[1:])
    )
    ratio = nilpotent * inverse_head
    bound = limit - head_valuation
    total = PuiseuxLogSeries([PuiseuxSeries.constant(1)])
    power = (total * ratio).truncate(bound)
    sign = -1
    while not power.is_zero():
        total = total + power.scale(sign)
        power = (power * ratio).truncate(bound)
        sign = -sign
    return total * inverse_head


def exp_series(
    series: PuiseuxSeries, order: Rational | None = None
) -> PuiseuxSeries:
    """
    Экспонента ряда с положительными показателями.

    Коэффициенты находятся из θE = θ(a)·E: k·E_k = Σ e·a_e·E_{k-e}.
    """
    if any(exponent <= 0 for exponent in series.exponents()):
        raise DomainError(SeriesCfg.EXP_DOMAIN_ERROR)
    order = None if order is None else as_fraction(order)
    target = min_order(series.order, order)
    if series.is_zero() and target is None:
        return PuiseuxSeries.constant(1)
    target = _require_order(target)
    step = _lattice(*series.exponents(), target)
    result = {Fraction(0): Fraction(1)}
    k = step
    while k < target:
        value = sum(
            (
                e * c * result.get(k - e, 0)
                for e, c in series
                if e <= k
            ),
            Fraction(0),
        )
        if value:
            result[k] = value / k
        k += step
    return PuiseuxSeries(
        result, target, lcm(series.ramification, target.denominator)
    )


def log1p_series(
    series: PuiseuxSeries, order: Rational | None = None
) -> PuiseuxSeries:
    """Логарифм log(1 + a) ряда a с положительными показателями."""
    if any(exponent <= 0 for exponent in series.exponents()):
        raise DomainError(SeriesCfg.LOG_DOMAIN_ERROR)
    order = None if order is None else as_fraction(order)
    target = min_order(series.order, order)
    if series.is_zero():
        return PuiseuxSeries.zero(target)
    target = _require_order(target)
    one_plus = (series + 1).truncate(target)
    derivative = series.theta() * invert_series(one_plus, target)
    return PuiseuxSeries(
        {e: c / e for e, c in derivative.truncate(target) if e},
        target,
        lcm(series.ramification, target.denominator),
    )


def binomial_power(
    series: PuiseuxSeries, exponent: Rational, order: Rational
) -> PuiseuxSeries:
    """(1 + a)^exponent = exp(exponent·log(1 + a)), главная ветвь."""
    exponent = as_fraction(exponent)
    if exponent == 0 or series.is_zero():
        return PuiseuxSeries.constant(1, order)
    if exponent.denominator == 1 and exponent > 0:
        result = PuiseuxSeries.constant(1)
        base = (series + 1).truncate(order)
        for _ in range(int(exponent)):
            result = (result * base).truncate(order)
        return result.with_order(min_order(result.order, as_fraction(order)))
    return exp_series(log1p_series(series, order).scale(exponent), order)


def _leading_power(coeff: Fraction, exponent: Fraction) -> Fraction:
    if exponent.denominator == 1:
        return coeff ** int(exponent)
    if coeff == 1:
        return Fraction(1)
    raise DomainError(
        SeriesCfg.FRACTIONAL_LEADING_ERROR.format(
            coeff=coeff, exponent=exponent
        )
    )


def compose_series(
    outer: PuiseuxSeries,
    inner: PuiseuxSeries,
    order: Rational | None = None,
) -> PuiseuxSeries:
    """
    Подставляет inner = c·x^v·(1 + g) вместо переменной ряда outer.

    Дробные степени (1 + g)^e берутся по главной ветви, поэтому при
    нецелых показателях outer старший коэффициент c обязан быть равен 1.
    """
    if inner.is_zero():
        raise DomainError(SeriesCfg.COMPOSE_DOMAIN_ERROR)
    valuation, coeff, tail = _relative(inner)
    if valuation <= 0:
        raise DomainError(SeriesCfg.COMPOSE_DOMAIN_ERROR)
    order = None if order is None else as_fraction(order)
    outer_valuation = outer.valuation()
    target = min_order(
        None if outer.order is None else valuation * outer.order,
        None
        if inner.order is None or outer_valuation is None
        else valuation * outer_valuation + inner.order - valuation,
        order,
    )
    if tail and target is None and not outer.is_zero():
        raise DomainError(SeriesCfg.ORDER_REQUIRED_ERROR)
    relative_tail = PuiseuxSeries(
        tail, add_order(inner.order, -valuation), inner.ramification
    )
    result = PuiseuxSeries.zero(target)
    for exponent, value in outer:
        shift = valuation * exponent
        if target is not None and shift >= target:
            continue
        factor = value * _leading_power(coeff, exponent)
        relative = add_order(target, -shift)
        if tail:
            power = binomial_power(relative_tail, exponent, relative)
        else:
            power = PuiseuxSeries.constant(1, relative)
        result = result + power.scale(factor).shift(shift)
    ramification = lcm(
        inner.ramification,
        outer.ramification * valuation.denominator,
        _lattice(target, *result.exponents()).denominator,
    )
    return PuiseuxSeries(result.coefficients, target, ramification)


def substitute_log(
    series: PuiseuxLogSeries,
    shift: PuiseuxSeries,
    scale: Rational = 1,
) -> PuiseuxLogSeries:
    """
    Переписывает логарифмические части после замены log X = s·log x + h.

    Часть i результата равна Σ_{j≥i} S_j·s^i·h^{j-i}/(j-i)!, где S_j -
    части исходного ряда, s = scale, h = shift.
    """
    scale = as_fraction(scale)
    rank = len(series.log_parts)
    powers = [PuiseuxSeries.constant(1)]
    for _ in range(1, rank):
        powers.append(powers[-1] * shift)
    parts = []
    for i in range(rank):
        part = PuiseuxSeries.zero(series.order)
        for j in range(i, rank):
            term = series.log_parts[j] * powers[j - i]
            part = part + term.scale(scale**i / factorial(j - i))
        parts.append(part)
    return PuiseuxLogSeries(parts)


def compose(
    outer: AnySeries, inner: PuiseuxSeries, order: Rational | None = None
) -> AnySeries:
    """
    Композиция outer∘inner для рядов с логарифмами и без.

    Для ряда с логарифмами log(inner) = v·log x + log(1 + g), поэтому
    старший коэффициент inner должен быть равен 1.
    """
    if isinstance(outer, PuiseuxSeries):
        return compose_series(outer, inner, order)
    parts = [compose_series(part, inner, order) for part in outer.log_parts]
    composed = PuiseuxLogSeries(parts)
    if outer.is_log_free():
        return composed
    valuation, coeff, tail = _relative(inner)
    if coeff != 1:
        raise DomainError(
            SeriesCfg.FRACTIONAL_LEADING_ERROR.format(
                coeff=coeff, exponent="log"
            )
        )
    relative_tail = PuiseuxSeries(
        tail, add_order(inner.order, -valuation), inner.ramification
    )
    log_shift = log1p_series(relative_tail, composed.order)
    return substitute_log(composed, log_shift, valuation)


def reversion(
    series: PuiseuxSeries, order: Rational | None = None
) -> PuiseuxSeries:
    """
    Композиционное обращение ряда m = c·x·(1 + h(x)).

    Неподвижная точка y = (X/c)·(1 + h(y))^{-1} уточняется итерациями;
    каждая итерация добавляет как минимум один шаг решётки показателей.
    """
    if series.is_zero():
        raise DomainError(SeriesCfg.REVERSION_DOMAIN_ERROR.format(v=None))
    valuation, coeff, tail = _relative(series)
    if valuation != 1:
        raise DomainError(
            SeriesCfg.REVERSION_DOMAIN_ERROR.format(v=valuation)
        )
    order = None if order is None else as_fraction(order)
    target = min_order(series.order, order)
    linear = PuiseuxSeries.monomial(1, 1 / coeff, None, series.ramification)
    if not tail:
        return linear.truncate(target)
    target = _require_order(target)
    relative_tail = PuiseuxSeries(
        tail, target - 1, series.ramification
    )
    step = _lattice(*tail, target)
    current = linear.truncate(target)
    for iteration in range(int((target - 1) / step) + 2):
        substituted = compose_series(relative_tail, current, target - 1)
        updated = (
            linear * invert_series(substituted + 1, target - 1)
        ).truncate(target)
        if updated == current:
            logger.debug(
                SeriesCfg.REVERSION_CONVERGED_LOG.format(
                    iterations=iteration, order=target
                )
            )
            return updated
        current = updated
    return current
