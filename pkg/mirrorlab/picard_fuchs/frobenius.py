"""
Модуль с решателем уравнений Пикара-Фукса методом Фробениуса.

Решатель не использует замкнутые формулы I-функций и служит независимым
оракулом для них. Оператор раскладывается по сдвигам L = Σ q^s·P_s(θ),
на логарифмическом блоке q^x·Σ y_m (log q)^m/m! оператор θ действует как
x + N, где N сдвигает логарифмическую степень вниз.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from config import settings
from core.constants import PicardFuchsCfg, SeriesCfg
from core.exceptions import DomainError, ResonanceError
from exact.scalars import Rational, as_fraction, binomial
from picard_fuchs.models import ThetaOperator
from picard_fuchs.operators import indicial_polynomial
from series.models import PuiseuxLogSeries, PuiseuxSeries

logger = logging.getLogger(__name__)

BLOCK = SeriesCfg.MAX_LOG_PARTS


def taylor_coefficients(
    polynomial: Sequence[Fraction], x: Fraction
) -> list[Fraction]:
    """Коэффициенты a_k = P^{(k)}(x)/k! многочлена P(x + N) по N."""
    degree = len(polynomial) - 1
    return [
        sum(
            (
                polynomial[i] * binomial(i, k) * x ** (i - k)
                for i in range(k, degree + 1)
            ),
            Fraction(0),
        )
        for k in range(degree + 1)
    ]


def _act(
    polynomial: Sequence[Fraction], x: Fraction, vector: Sequence[Fraction]
) -> list[Fraction]:
    """Действие P(x + N) на вектор коэффициентов логарифмического блока."""
    coefficients = taylor_coefficients(polynomial, x)
    return [
        sum(
            (
                coefficients[k] * vector[m + k]
                for k in range(len(coefficients))
                if m + k < BLOCK
            ),
            Fraction(0),
        )
        for m in range(BLOCK)
    ]


def _evaluate(polynomial: Sequence[Fraction], x: Fraction) -> Fraction:
    return sum(
        (value * x**power for power, value in enumerate(polynomial)),
        Fraction(0),
    )


def root_multiplicity(
    polynomial: Sequence[Fraction], root: Fraction
) -> int:
    """Кратность корня root у многочлена (0, если это не корень)."""
    coefficients = taylor_coefficients(polynomial, root)
    for k, value in enumerate(coefficients):
        if value:
            return k
    return len(coefficients)


def indicial_roots(operator: ThetaOperator) -> dict[Fraction, int]:
    """
    Рациональные корни определяющего многочлена с кратностями.

    Кандидаты перебираются по теореме о рациональных корнях после
    приведения коэффициентов к целым.
    """
    polynomial = list(indicial_polynomial(operator))
    while polynomial and polynomial[-1] == 0:
        polynomial.pop()
    scale = lcm(*(value.denominator for value in polynomial))
    integral = [int(value * scale) for value in polynomial]
    low = next(i for i, value in enumerate(integral) if value)
    roots: dict[Fraction, int] = {}
    if low:
        roots[Fraction(0)] = low
    constant, leading = abs(integral[low]), abs(integral[-1])
    candidates = {
        Fraction(sign * p, r)
        for p in _divisors(constant)
        for r in _divisors(leading)
        for sign in (1, -1)
    }
    for candidate in sorted(candidates):
        multiplicity = root_multiplicity(polynomial, candidate)
        if multiplicity:
            roots[candidate] = multiplicity
    return dict(sorted(roots.items()))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _lattice_step(shifts: Sequence[Fraction]) -> Fraction:
    base = shifts[0]
    differences = [shift - base for shift in shifts[1:]]
    if not differences:
        return Fraction(1)
    denominator = lcm(*(d.denominator for d in differences))
    numerator = 0
    for difference in differences:
        numerator = gcd(numerator, int(difference * denominator))
    return Fraction(numerator, denominator)


def _solve_block(
    polynomial: Sequence[Fraction],
    x: Fraction,
    rhs: Sequence[Fraction],
) -> list[Fraction]:
    """
    Решает P(x + N)·y = rhs на блоке длины BLOCK.

    Для корня кратности μ компоненты y_0..y_{μ-1} свободны и полагаются
    равными нулю; уравнения с m + μ ≥ BLOCK требуют нулевой правой части.
    """
    coefficients = taylor_coefficients(polynomial, x)
    multiplicity = next(
        (k for k, value in enumerate(coefficients) if value), None
    )
    if multiplicity is None:
        raise ResonanceError(
            PicardFuchsCfg.RESONANCE_ERROR.format(exponent=x), x
        )
    solution = [Fraction(0)] * BLOCK
    lead = coefficients[multiplicity]
    for m in reversed(range(BLOCK)):
        target = m + multiplicity
        known = sum(
            (
                coefficients[k] * solution[m + k]
                for k in range(multiplicity + 1, len(coefficients))
                if m + k < BLOCK
            ),
            Fraction(0),
        )
        if target >= BLOCK:
            if rhs[m] != known:
                raise ResonanceError(
                    PicardFuchsCfg.RESONANCE_ERROR.format(exponent=x), x
                )
            continue
        solution[target] = (rhs[m] - known) / lead
    return solution


def frobenius_solve(
    operator: ThetaOperator,
    indicial_root: Rational,
    log_rank: int,
    order: Rational,
) -> PuiseuxLogSeries:
    """
    Нормированное решение Фробениуса с показателем indicial_root.

    Параметры:
        operator: Оператор с точными многочленными коэффициентами.
        indicial_root: Корень определяющего многочлена.
        log_rank: Логарифмический ранг j старшего блока (y_{ρ,j} = 1).
        order: Граница усечения по показателю.

    Возвращает:
        PuiseuxLogSeries: Решение op(y) = 0 до порядка order.
    """
    rho = as_fraction(indicial_root)
    order = as_fraction(order)
    polynomials = operator.shift_polynomials()
    shifts = list(polynomials)
    base_shift = shifts[0]
    indicial = polynomials[base_shift]
    multiplicity = root_multiplicity(indicial, rho)
    if multiplicity <= log_rank or not 0 <= log_rank < BLOCK:
        raise DomainError(
            PicardFuchsCfg.NOT_INDICIAL_ROOT_ERROR.format(
                root=rho, rank=log_rank, multiplicity=multiplicity
            )
        )
    step = _lattice_step(shifts)
    blocks: dict[Fraction, list[Fraction]] = {}
    initial = [Fraction(0)] * BLOCK
    initial[log_rank] = Fraction(1)
    blocks[rho] = initial
    x = rho + step
    while x < order:
        rhs = [Fraction(0)] * BLOCK
        for shift in shifts[1:]:
            source = x + base_shift - shift
            if source in blocks:
                image = _act(polynomials[shift], source, blocks[source])
                rhs = [left - right for left, right in zip(rhs, image)]
        if any(rhs) or _evaluate(indicial, x) == 0:
            blocks[x] = _solve_block(indicial, x, rhs)
        x += step
    logger.debug(
        PicardFuchsCfg.FROBENIUS_LOG.format(
            root=rho, rank=log_rank, order=order, blocks=len(blocks)
        )
    )
    ramification = lcm(
        settings.RAMIFICATION,
        order.denominator,
        *(exponent.denominator for exponent in blocks),
    )
    parts = [
        PuiseuxSeries(
            {x: vector[m] for x, vector in blocks.items()},
            order,
            ramification,
        )
        for m in range(BLOCK)
    ]
    return PuiseuxLogSeries(parts)
