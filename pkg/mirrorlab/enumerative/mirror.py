"""
Модуль с зеркальными отображениями и извлечением инвариантов.

Ряды I-функций берутся либо из замкнутых формул, либо из решателя
Фробениуса (source="frobenius"); обе ветви дают одинаковые таблицы.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import ceil

from core.constants import EnumerativeCfg, IFunctionCfg
from core.exceptions import DomainError, InternalConsistencyError
from enumerative.models import InvariantTable
from exact.scalars import Rational, as_fraction, factorial
from ifunctions.generators import i_cy, i_lg, t_cy, t_lg
from ifunctions.models import extended_i_function
from picard_fuchs.frobenius import frobenius_solve
from picard_fuchs.operators import extended_pf, lg_pf, pf_L
from series.models import PuiseuxLogSeries, PuiseuxSeries
from series.operations import (
    compose,
    compose_series,
    exp_series,
    invert_series,
    reversion,
)

logger = logging.getLogger(__name__)


def cy_components(
    order: Rational, source: str = EnumerativeCfg.CLOSED_FORM
) -> list[PuiseuxLogSeries]:
    """Компоненты I^CY_0..I^CY_3 из выбранного источника."""
    if source == EnumerativeCfg.CLOSED_FORM:
        return [i_cy(k, order) for k in range(IFunctionCfg.COMPONENTS)]
    if source == EnumerativeCfg.FROBENIUS:
        return [
            frobenius_solve(pf_L(), 0, k, order)
            for k in range(IFunctionCfg.COMPONENTS)
        ]
    raise DomainError(EnumerativeCfg.SOURCE_ERROR.format(source=source))


def disk_potential_cy(
    order: Rational, source: str = EnumerativeCfg.CLOSED_FORM
) -> PuiseuxSeries:
    """T^CY; в ветви Фробениуса нормировка 30·q^{1/2} задаётся явно."""
    if source == EnumerativeCfg.CLOSED_FORM:
        return t_cy(order)
    if source == EnumerativeCfg.FROBENIUS:
        solution = frobenius_solve(extended_pf(), Fraction(1, 2), 0, order)
        return solution.part(0).scale(EnumerativeCfg.DISK_LEADING)
    raise DomainError(EnumerativeCfg.SOURCE_ERROR.format(source=source))


def lg_components(
    order: Rational, source: str = EnumerativeCfg.CLOSED_FORM
) -> list[PuiseuxSeries]:
    """I^LG_0..I^LG_3; решение Фробениуса с корнем k+1 делится на k!."""
    if source == EnumerativeCfg.CLOSED_FORM:
        return [i_lg(k, order) for k in range(IFunctionCfg.COMPONENTS)]
    if source == EnumerativeCfg.FROBENIUS:
        return [
            frobenius_solve(lg_pf(), k + 1, 0, order)
            .part(0)
            .scale(1 / factorial(k))
            for k in range(IFunctionCfg.COMPONENTS)
        ]
    raise DomainError(EnumerativeCfg.SOURCE_ERROR.format(source=source))


def mirror_map_cy(
    order: Rational, source: str = EnumerativeCfg.CLOSED_FORM
) -> tuple[PuiseuxLogSeries, PuiseuxSeries]:
    """
    Зеркальное отображение log Q = I_1/I_0 = log q + f^CY(q).

    Параметры:
        order: Порядок усечения рядов по q (не меньше 2).
        source: Источник I-функций.

    Возвращает:
        tuple: (log Q как ряд с логарифмом, q как ряд по Q).
    """
    order = as_fraction(order)
    if order < 2:
        raise DomainError(EnumerativeCfg.ORDER_ERROR.format(order=order))
    components = cy_components(order, source)
    inverse_i0 = invert_series(components[0].part(0), order)
    log_q = components[1] * inverse_i0
    f_cy = log_q.part(0)
    q_of_small_q = exp_series(f_cy, order).shift(1)
    inverse = reversion(q_of_small_q)
    logger.debug(
        EnumerativeCfg.MIRROR_MAP_LOG.format(
            order=order, leading=f_cy[1], inverse_order=inverse.order
        )
    )
    return log_q, inverse


def _flat_ratio(
    component: PuiseuxLogSeries,
    i0: PuiseuxSeries,
    inverse: PuiseuxSeries,
    order: Fraction,
) -> PuiseuxLogSeries:
    """(I_k/I_0)∘(q как функция Q), записанное через log Q."""
    ratio = component * invert_series(i0, order)
    return compose(ratio, inverse, order)


def _check_classical(
    series: PuiseuxLogSeries, top: int, expected: Fraction
) -> None:
    classical = series.part(top)
    if series.log_rank != top or classical != PuiseuxSeries.constant(
        expected, classical.order
    ):
        raise InternalConsistencyError(
            EnumerativeCfg.CLASSICAL_TERM_ERROR.format(
                rank=series.log_rank, top=classical
            )
        )


def gw_invariants(
    max_degree: int, source: str = EnumerativeCfg.CLOSED_FORM
) -> InvariantTable:
    """
    Инварианты Громова-Виттена рода 0 квинтики N_d, d ≤ max_degree.

    G(Q) = 5·(I_2/I_0)∘q(Q) = 5·(log Q)^2/2 + Σ d·N_d·Q^d; после вычитания
    классической части логарифмов остаться не должно.
    """
    if max_degree < 1:
        raise DomainError(
            EnumerativeCfg.MAX_DEGREE_ERROR.format(max_degree=max_degree)
        )
    order = Fraction(max_degree + 1)
    components = cy_components(order, source)
    _, inverse = mirror_map_cy(order, source)
    flat = _flat_ratio(
        components[2], components[0].part(0), inverse, order
    ).scale(EnumerativeCfg.DEGREE)
    _check_classical(flat, 2, Fraction(EnumerativeCfg.DEGREE))
    if not flat.part(1).is_zero():
        raise InternalConsistencyError(
            EnumerativeCfg.RESIDUAL_LOG_ERROR.format(residual=flat.part(1))
        )
    derivative = flat.part(0)
    entries = {
        Fraction(d): derivative[d] / d
        for d in range(1, max_degree + 1)
        if derivative[d]
    }
    return InvariantTable(
        EnumerativeCfg.GW_CLOSED, entries, Fraction(max_degree)
    )


def h3_consistency(
    max_degree: int, source: str = EnumerativeCfg.CLOSED_FORM
) -> PuiseuxLogSeries:
    """
    Невязка H^3-компоненты J-функции.

    5·(I_3/I_0)∘q(Q) сравнивается с (log Q)·DF_0 - 2·F_0, где
    F_0 = (5/6)(log Q)^3 + Σ N_d Q^d строится из gw_invariants.

    Возвращает:
        PuiseuxLogSeries: Разность; нулевая при согласованных данных.
    """
    table = gw_invariants(max_degree, source)
    order = Fraction(max_degree + 1)
    components = cy_components(order, source)
    _, inverse = mirror_map_cy(order, source)
    flat = _flat_ratio(
        components[3], components[0].part(0), inverse, order
    ).scale(EnumerativeCfg.DEGREE)
    potential = table.as_series()
    expected = PuiseuxLogSeries(
        [
            potential.scale(-2),
            potential.theta(),
            PuiseuxSeries.zero(),
            PuiseuxSeries.constant(EnumerativeCfg.DEGREE),
        ]
    ).truncate(order)
    return (flat - expected).truncate(order)


def disk_invariants_cy(
    max_degree: int, source: str = EnumerativeCfg.CLOSED_FORM
) -> InvariantTable:
    """
    Дисковые инварианты N^disk_d при нечётных d ≤ max_degree.

    F^CY_{0,1}(Q) = (T^CY/I_0)∘q(Q), где полуцелые степени берутся по
    главной ветви Q^{1/2} = q^{1/2}·e^{f^CY/2}.
    """
    if max_degree < 1:
        raise DomainError(
            EnumerativeCfg.MAX_DEGREE_ERROR.format(max_degree=max_degree)
        )
    potential = disk_potential_series(max_degree, source)
    entries = {
        Fraction(d): potential[Fraction(d, 2)]
        for d in range(1, max_degree + 1, 2)
        if potential[Fraction(d, 2)]
    }
    return InvariantTable(
        EnumerativeCfg.DISK_CY, entries, Fraction(max_degree)
    )


def disk_potential_series(
    max_degree: int, source: str = EnumerativeCfg.CLOSED_FORM
) -> PuiseuxSeries:
    """F^CY_{0,1}(Q) до показателя max_degree/2 включительно."""
    disk_order = Fraction(max_degree + 1, 2)
    map_order = Fraction(ceil(disk_order) + 1)
    components = cy_components(map_order, source)
    _, inverse = mirror_map_cy(map_order, source)
    ratio = disk_potential_cy(disk_order, source) * invert_series(
        components[0].part(0), map_order
    )
    return compose_series(ratio, inverse, disk_order)


def multiple_cover_reduce(table: InvariantTable) -> InvariantTable:
    """
    Числа n_d из N_d = Σ_{k|d} n_{d/k}/k^3.

    Поправка на кратные накрытия не входит в исходные формулы и служит
    проверкой целочисленности.
    """
    reduced: dict[Fraction, Fraction] = {}
    for degree in table.degrees():
        d = int(degree)
        value = table[degree]
        for k in range(2, d + 1):
            if d % k == 0:
                value -= reduced.get(Fraction(d // k), 0) / Fraction(k) ** 3
        reduced[degree] = value
    return InvariantTable(
        EnumerativeCfg.GW_CLOSED_BPS, reduced, table.truncation
    )


def disk_multiple_cover_reduce(table: InvariantTable) -> InvariantTable:
    """Числа n_d из N_d = Σ_{k нечётн., k|d} n_{d/k}/k^2."""
    reduced: dict[Fraction, Fraction] = {}
    for degree in table.degrees():
        d = int(degree)
        value = table[degree]
        for k in range(3, d + 1, 2):
            if d % k == 0:
                value -= reduced.get(Fraction(d // k), 0) / Fraction(k) ** 2
        reduced[degree] = value
    return InvariantTable(
        EnumerativeCfg.DISK_CY_REDUCED, reduced, table.truncation
    )


def lg_mirror_series(
    order: Rational, source: str = EnumerativeCfg.CLOSED_FORM
) -> tuple[PuiseuxSeries, PuiseuxSeries]:
    """
    LG-отображение τ = I^LG_1/I^LG_0 и гипотетический потенциал.

    F^LG_{0,1}(τ) = (T^LG/I^LG_0)∘t(τ); результат помечается как
    гипотетический на уровне таблиц.

    Параметры:
        order: Порядок усечения по t (не меньше 5/2).

    Возвращает:
        tuple: (τ как ряд по t, F^LG_{0,1} как ряд по τ).
    """
    order = as_fraction(order)
    if order < EnumerativeCfg.LG_MIN_ORDER:
        raise DomainError(EnumerativeCfg.ORDER_ERROR.format(order=order))
    working = order + 2
    components = lg_components(working, source)
    inverse_i0 = invert_series(components[0], working)
    tau = (components[1] * inverse_i0).truncate(order)
    ratio = t_lg(working) * inverse_i0
    potential = compose_series(ratio, reversion(tau), order)
    return tau, potential


def lg_disk_table(order: Rational) -> InvariantTable:
    """Коэффициенты F^LG_{0,1} при τ^{e}; таблица гипотетическая."""
    _, potential = lg_mirror_series(order)
    return InvariantTable(
        EnumerativeCfg.DISK_LG,
        dict(potential.coefficients),
        potential.order - Fraction(1, potential.ramification),
        conjectural=True,
    )


def extended_potentials(
    order: Rational,
) -> tuple[PuiseuxSeries, PuiseuxSeries]:
    """
    Потенциалы F^± расширенной модели.

    F^+ = (pairing·сектор p/I_0)∘q(Q) = -F^CY_{0,1}, и
    F^- = (pairing·сектор p_-/I^LG_0)∘t(τ) = -F^LG_{0,1}.

    Параметры:
        order: Порядок усечения по Q и по τ.
    """
    order = as_fraction(order)
    map_order = Fraction(ceil(order) + 1)
    positive = extended_i_function(IFunctionCfg.POSITIVE_PHASE, map_order)
    _, inverse = mirror_map_cy(map_order)
    i0 = positive.sector(positive.unit_label)
    plus = compose_series(
        positive.disk_component().truncate(order)
        * invert_series(i0.part(0), map_order),
        inverse,
        order,
    )
    working = order + 2
    negative = extended_i_function(IFunctionCfg.NEGATIVE_PHASE, working)
    lg_i0 = negative.sector(negative.unit_label)
    inverse_lg_i0 = invert_series(lg_i0, working)
    tau = (
        negative.sector(IFunctionCfg.LG_SECTOR.format(k=1)) * inverse_lg_i0
    ).truncate(order)
    minus = compose_series(
        negative.disk_component() * inverse_lg_i0, reversion(tau), order
    )
    return plus, minus
