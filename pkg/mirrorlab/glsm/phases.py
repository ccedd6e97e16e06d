"""
Модуль с комбинаторикой фаз: минимальные антиконусы, соотношение веера,
элементы Box и их возрасты.

Координаты нумеруются с единицы, как столбцы веера v_1..v_N.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import floor, lcm

from core.constants import GlsmCfg
from core.exceptions import DomainError
from glsm.models import BoxElement, GlsmCharges

logger = logging.getLogger(__name__)


def _check_sign(zeta_sign: int) -> None:
    if zeta_sign not in (1, -1):
        raise DomainError(GlsmCfg.ZETA_SIGN_ERROR.format(zeta=zeta_sign))


def _fractional(value: Fraction) -> Fraction:
    return value - floor(value)


def minimal_anticones(
    charges: GlsmCharges, zeta_sign: int
) -> set[frozenset[int]]:
    """
    Минимальные антиконусы фазы sign(ζ) = zeta_sign.

    Для тора ранга 1 это одноэлементные множества {i} с sign(D_i) = sign(ζ).
    """
    _check_sign(zeta_sign)
    if any(weight == 0 for weight in charges.weights):
        raise DomainError(
            GlsmCfg.ZERO_WEIGHT_ERROR.format(model=charges.name)
        )
    anticones = {
        frozenset({index})
        for index, coord in enumerate(charges.coords, start=1)
        if coord.weight * zeta_sign > 0
    }
    if not anticones:
        raise DomainError(
            GlsmCfg.EMPTY_PHASE_ERROR.format(
                model=charges.name, zeta=zeta_sign
            )
        )
    return anticones


def stable_coordinates(charges: GlsmCharges, zeta_sign: int) -> set[int]:
    """Координаты, входящие в какой-либо минимальный антиконус."""
    return {
        index
        for anticone in minimal_anticones(charges, zeta_sign)
        for index in anticone
    }


def fan_relation(charges: GlsmCharges) -> tuple[int, ...]:
    """
    Примитивное целое соотношение Σ r_i·v_i = 0 между столбцами веера.

    Ядро матрицы веера ищется точным методом Гаусса; знак нормируется
    так, чтобы первый ненулевой элемент был положителен.
    """
    if charges.fan_columns is None:
        raise DomainError(GlsmCfg.NO_FAN_ERROR.format(model=charges.name))
    columns = charges.fan_columns
    rows = [
        [Fraction(column[i]) for column in columns]
        for i in range(len(columns[0]))
    ]
    pivots = _row_reduce(rows)
    free = [
        j for j in range(len(columns)) if j not in pivots.values()
    ]
    if len(free) != 1:
        raise DomainError(
            GlsmCfg.FAN_KERNEL_ERROR.format(
                model=charges.name, dimension=len(free)
            )
        )
    kernel = [Fraction(0)] * len(columns)
    kernel[free[0]] = Fraction(1)
    for row_index, column_index in pivots.items():
        kernel[column_index] = -rows[row_index][free[0]]
    scale = lcm(*(value.denominator for value in kernel))
    relation = [int(value * scale) for value in kernel]
    first = next(value for value in relation if value)
    return tuple(value if first > 0 else -value for value in relation)


def _row_reduce(rows: list[list[Fraction]]) -> dict[int, int]:
    """Приводит матрицу к виду Гаусса-Жордана; возвращает строка -> столбец."""
    pivots: dict[int, int] = {}
    row = 0
    width = len(rows[0]) if rows else 0
    for column in range(width):
        pivot = next(
            (r for r in range(row, len(rows)) if rows[r][column]), None
        )
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        lead = rows[row][column]
        rows[row] = [value / lead for value in rows[row]]
        for other in range(len(rows)):
            if other != row and rows[other][column]:
                factor = rows[other][column]
                rows[other] = [
                    a - factor * b for a, b in zip(rows[other], rows[row])
                ]
        pivots[column] = row
        row += 1
    return {r: c for c, r in pivots.items()}


def coordinate_weights(
    charges: GlsmCharges, element: tuple[Fraction, int]
) -> list[Fraction]:
    """Дробные веса действия элемента (a, s) на координатах, в [0, 1)."""
    a, sign = element
    finite = Fraction(0) if sign == 1 else Fraction(1, 2)
    return [
        _fractional(a * coord.weight + finite * coord.finite_weight)
        for coord in charges.coords
    ]


def make_box_element(
    charges: GlsmCharges, element: tuple[Fraction, int]
) -> BoxElement:
    """Строит BoxElement для группового элемента (a, s)."""
    weights = coordinate_weights(charges, element)
    a, sign = element
    return BoxElement(
        group_element=(a, sign),
        age=sum(weights, Fraction(0)),
        fixed_coords=frozenset(
            index
            for index, weight in enumerate(weights, start=1)
            if weight == 0
        ),
        component_label=GlsmCfg.COMPONENT_LABEL.format(a=a, sign=sign),
    )


def torsion_order(charges: GlsmCharges) -> int:
    """Порядок перебора: lcm(|D_i|), умноженный на порядок μ_2-части."""
    return lcm(*(abs(weight) for weight in charges.weights)) * (
        charges.finite_order
    )


def box_elements(charges: GlsmCharges, zeta_sign: int) -> list[BoxElement]:
    """
    Элементы Box фазы sign(ζ) = zeta_sign.

    Перебираются e^{2πi·j/N}, j = 0..N-1, N = torsion_order, и все
    элементы конечной части. Элемент входит в Box, если его неподвижное
    подпространство содержит координату из минимального антиконуса.
    Элементы, действующие на V одинаково, склеиваются.

    Возвращает:
        list: Элементы, упорядоченные по (age, a, s).
    """
    stable = stable_coordinates(charges, zeta_sign)
    order = torsion_order(charges)
    signs = (1, -1) if charges.finite_order == 2 else (1,)
    seen: set[tuple[Fraction, ...]] = set()
    elements = []
    for j in range(order):
        for sign in signs:
            element = (Fraction(j, order), sign)
            action = tuple(coordinate_weights(charges, element))
            if action in seen:
                continue
            seen.add(action)
            box = make_box_element(charges, element)
            if box.fixed_coords & stable:
                elements.append(box)
    elements.sort(key=lambda box: (box.age, box.group_element))
    logger.debug(
        GlsmCfg.BOX_LOG.format(
            model=charges.name, zeta=zeta_sign, count=len(elements)
        )
    )
    return elements


def inverse_box_element(
    charges: GlsmCharges, element: BoxElement
) -> BoxElement:
    """Групповой обратный элемент: (a, s) ↦ (-a mod 1, s)."""
    a, sign = element.group_element
    return make_box_element(charges, (_fractional(-a), sign))


def moving_coordinates(element: BoxElement, size: int) -> int:
    """Число координат, на которых элемент действует нетривиально."""
    return size - len(element.fixed_coords)
