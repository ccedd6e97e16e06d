"""
Модуль с интегрированием вдоль вертикального контура σ = δ + i·s.

Голый интеграл (1/2πi)·∫ f(σ)dσ равен (1/2π)·∫ f(δ + i·s)ds; каждая
полупрямая обрезается там, где оценка хвоста C·e^{-κ|s|}·|s|^ρ падает
ниже требуемой точности, и интегрируется методом tanh-sinh по
участкам длиной порядка периода осцилляций.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import ceil, log, pi

import mpmath

from core.constants import MellinBarnesCfg
from core.exceptions import ConvergenceError, DivergentDirectionError
from mellin_barnes.models import MBIntegrand, MBResult, Precision

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecayRates:
    """
    Показатели убывания подынтегрального выражения на контуре.

    Поля:
    - upper: κ_+ при s → +∞.
    - lower: κ_- при s → -∞.
    - power: Степень ρ полиномиального множителя |s|^ρ.
    - frequency: Частота осцилляций по s.
    """

    upper: float
    lower: float
    power: float
    frequency: float


def decay_rates(ig: MBIntegrand) -> DecayRates:
    """
    Асимптотика |f(δ + i·s)| по формуле Стирлинга.

    Каждый множитель Γ(a·σ + b) даёт e^{-π|a·s|/2}·|a·s|^{a·δ+b-1/2};
    член вставки e^{2πi·n·σ} растёт как e^{-2π·n·s}, а q^{-σ} как
    e^{θ·s}, где θ = arg q.
    """
    log_q = ig.log_q()
    theta = float(mpmath.im(log_q))
    gamma_rate = pi / 2 * sum(float(abs(a)) for a, _ in ig.gamma_factors)
    exponents = ig.insertion.support()
    upper = gamma_rate + 2 * pi * min(exponents) - theta
    lower = gamma_rate - 2 * pi * max(exponents) + theta
    power = sum(
        float(a * ig.delta + b) for a, b in ig.gamma_factors
    ) - len(ig.gamma_factors) / 2
    total_charge = float(sum(a for a, _ in ig.gamma_factors))
    phase_rate = sum(
        float(a) * log(float(abs(a))) for a, _ in ig.gamma_factors
    )
    frequency = abs(phase_rate - float(mpmath.re(log_q)))
    if total_charge:
        frequency += abs(total_charge) * log(
            MellinBarnesCfg.MAX_HEIGHT
        )
    return DecayRates(upper, lower, power, frequency)


def _check_direction(ig: MBIntegrand, rates: DecayRates) -> None:
    exponents = ig.insertion.support()
    slack = -MellinBarnesCfg.BORDERLINE_TOLERANCE
    if rates.upper < slack:
        raise DivergentDirectionError(
            MellinBarnesCfg.DIVERGENT_ERROR.format(
                exponent=min(exponents), side="+", rate=rates.upper
            ),
            min(exponents),
            "+",
        )
    if rates.lower < slack:
        raise DivergentDirectionError(
            MellinBarnesCfg.DIVERGENT_ERROR.format(
                exponent=max(exponents), side="-", rate=rates.lower
            ),
            max(exponents),
            "-",
        )


def tail_height(rate: float, power: float, prec: Precision) -> float:
    """
    Высота S, начиная с которой e^{-κS}·S^ρ меньше 2^{-bits}.

    Параметры:
        rate: Показатель κ > 0.
        power: Степень ρ.
        prec: Точность.

    Возвращает:
        S; при S больше MAX_HEIGHT поднимается ConvergenceError.
    """
    target = prec.bits * log(2) + MellinBarnesCfg.TAIL_MARGIN
    height = target / rate
    for _ in range(MellinBarnesCfg.TAIL_ITERATIONS):
        height = (target + max(power, 0) * log(1 + height)) / rate
    if height > MellinBarnesCfg.MAX_HEIGHT:
        raise ConvergenceError(
            MellinBarnesCfg.HEIGHT_ERROR.format(
                height=height, maximum=MellinBarnesCfg.MAX_HEIGHT
            )
        )
    return height


def _half_line(
    ig: MBIntegrand, height: float, frequency: float, sign: int
) -> tuple[object, object, int]:
    pieces = max(
        MellinBarnesCfg.MIN_PIECES,
        ceil(height * (frequency + 1) / pi),
    )
    points = [sign * height * k / pieces for k in range(pieces + 1)]
    delta = mpmath.mpf(ig.delta.numerator) / ig.delta.denominator

    def integrand(s):
        return ig(mpmath.mpc(delta, s))

    value, error = mpmath.quad(
        integrand, points, error=True, method=MellinBarnesCfg.QUADRATURE
    )
    return sign * value, error, pieces


def _integrate(ig: MBIntegrand, prec: Precision) -> MBResult:
    rates = decay_rates(ig)
    _check_direction(ig, rates)
    upper = tail_height(rates.upper, rates.power, prec)
    lower = tail_height(rates.lower, rates.power, prec)
    with mpmath.workprec(prec.bits + MellinBarnesCfg.GUARD_BITS):
        top, top_error, top_pieces = _half_line(
            ig, upper, rates.frequency, 1
        )
        bottom, bottom_error, bottom_pieces = _half_line(
            ig, lower, rates.frequency, -1
        )
        value = (top + bottom) / (2 * mpmath.pi)
        error = (top_error + bottom_error) / (2 * mpmath.pi) + (
            abs(value) * mpmath.ldexp(1, -prec.bits)
        )
    logger.debug(
        MellinBarnesCfg.CONTOUR_LOG.format(
            label=ig.label,
            upper=upper,
            lower=lower,
            pieces=top_pieces + bottom_pieces,
        )
    )
    return MBResult(
        prec.rounded(value),
        prec.rounded(error),
        MellinBarnesCfg.CONTOUR,
        top_pieces + bottom_pieces,
    )


def _neville(steps: list[float], values: list[object]) -> list[object]:
    """Значения интерполяционного многочлена в нуле по 1, 2, ... узлам."""
    table = list(values)
    estimates = [table[0]]
    for level in range(1, len(steps)):
        for i in range(len(steps) - 1, level - 1, -1):
            table[i] = (
                steps[i] * table[i - 1] - steps[i - level] * table[i]
            ) / (steps[i] - steps[i - level])
        estimates.append(table[level])
    return estimates


def _richardson(
    ig: MBIntegrand, prec: Precision, direction: int
) -> MBResult:
    """
    Предел при повороте arg q на direction·ε, ε → 0.

    На границе окна κ = 0 интеграл сходится лишь степенным образом,
    поэтому значение берётся как экстраполяция значений при ε_k = ε_0/2^k.
    """
    with mpmath.workprec(prec.working_bits):
        theta = mpmath.im(ig.log_q())
        steps = [
            mpmath.mpf(MellinBarnesCfg.RICHARDSON_EPSILON) / 2**k
            for k in range(MellinBarnesCfg.RICHARDSON_LEVELS)
        ]
        results = [
            _integrate(ig.with_arg(theta + direction * step), prec)
            for step in steps
        ]
        estimates = _neville(steps, [result.value for result in results])
        error = abs(estimates[-1] - estimates[-2]) + max(
            result.est_error for result in results
        )
    logger.info(
        MellinBarnesCfg.RICHARDSON_LOG.format(
            label=ig.label, theta=theta, levels=len(steps)
        )
    )
    return MBResult(
        prec.rounded(estimates[-1]),
        prec.rounded(error),
        MellinBarnesCfg.CONTOUR,
        sum(result.n_terms for result in results),
    )


def contour_integrate(
    ig: MBIntegrand, prec: Precision | None = None
) -> MBResult:
    """
    Голый интеграл (1/2πi)·∫_{δ-i∞}^{δ+i∞} f(σ)dσ.

    Нулевая вставка даёт 0. При κ_± < 0 интеграл расходится, и
    поднимается DivergentDirectionError с показателем вставки,
    нарушающим условие. При κ_± = 0 значение получается экстраполяцией
    Ричардсона по повороту arg q внутрь области сходимости.
    """
    prec = prec or Precision()
    if ig.insertion.is_zero():
        return MBResult(
            mpmath.mpc(0), mpmath.mpf(0), MellinBarnesCfg.CONTOUR
        )
    rates = decay_rates(ig)
    _check_direction(ig, rates)
    tolerance = MellinBarnesCfg.BORDERLINE_TOLERANCE
    if rates.upper < tolerance and rates.lower < tolerance:
        raise ConvergenceError(
            MellinBarnesCfg.BORDERLINE_ERROR.format(label=ig.label)
        )
    if rates.upper < tolerance:
        return _richardson(ig, prec, -1)
    if rates.lower < tolerance:
        return _richardson(ig, prec, 1)
    return _integrate(ig, prec)
