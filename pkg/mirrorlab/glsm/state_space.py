"""
Модуль с многочленами Пуанкаре: когомологии Чена-Руана и пространство
состояний A-модели расширенной GLSM.
"""

from __future__ import annotations

import logging
from itertools import product

from core.constants import GlsmCfg
from glsm.models import GlsmCharges, PoincarePolynomial, extended_model
from glsm.phases import box_elements, stable_coordinates

logger = logging.getLogger(__name__)


def projective_poincare(n: int) -> PoincarePolynomial:
    """1 + t^2 + … + t^{2(n-1)}: числа Бетти (взвешенного) P^{n-1}."""
    return PoincarePolynomial({2 * i: 1 for i in range(n)})


def chen_ruan_poincare(
    charges: GlsmCharges, zeta_sign: int
) -> PoincarePolynomial:
    """
    Многочлен Пуанкаре орбифолдных когомологий Чена-Руана.

    Каждый элемент Box вносит t^{2·age}·P(ядра), где ядро неподвижной
    компоненты есть проективное пространство на неподвижных координатах
    знака ζ.
    """
    stable = stable_coordinates(charges, zeta_sign)
    total = PoincarePolynomial()
    for element in box_elements(charges, zeta_sign):
        core = len(element.fixed_coords & stable)
        if not core:
            logger.warning(
                GlsmCfg.EMPTY_CORE_WARNING.format(
                    label=element.component_label
                )
            )
            continue
        shift = 2 * element.age
        if shift.denominator != 1:
            logger.warning(
                GlsmCfg.FRACTIONAL_AGE_WARNING.format(
                    label=element.component_label, age=element.age
                )
            )
            continue
        total = total + projective_poincare(core).shift(int(shift))
    return total


def jacobi_invariant_dims(
    degree: int = GlsmCfg.FERMAT_DEGREE,
    variables: int = GlsmCfg.FERMAT_VARIABLES,
) -> list[int]:
    """
    Размерности инвариантных частей кольца Якоби многочлена Ферма.

    Мономы x^a с 0 ≤ a_i ≤ degree-2 и Σ a_i ≡ 0 (mod degree)
    группируются по Σ a_i / degree.

    Возвращает:
        list: Для квинтики [1, 101, 101, 1].
    """
    top = (degree - 2) * variables // degree
    dims = [0] * (top + 1)
    for exponents in product(range(degree - 1), repeat=variables):
        total = sum(exponents)
        if total % degree == 0:
            dims[total // degree] += 1
    return dims


def state_space_poincare_extended(zeta_sign: int = 1) -> PoincarePolynomial:
    """
    Многочлен Пуанкаре пространства состояний при W = p·W_5(x) + t·uv,
    t ≠ 0.

    При ζ > 0 пространство равно H^*(X_5) ⊕ H^*(X_5). При ζ < 0
    широкие сектора 1_0 и 1_1 несут по M = Σ jacobi_invariant_dims
    классов степени 3, сектор 1_3 обнуляется членом uv, а узкие сектора
    с неподвижной координатой p дают t^{2·age-4}. Обе фазы дают
    2 + 2t^2 + 408t^3 + 2t^4 + 2t^6.
    """
    middle = sum(jacobi_invariant_dims())
    if zeta_sign > 0:
        quintic = projective_poincare(
            GlsmCfg.AMBIENT_CLASSES
        ) + PoincarePolynomial.monomial(GlsmCfg.MIDDLE_DEGREE, middle)
        return quintic * 2
    charges = extended_model()
    p_index = charges.index_of(GlsmCfg.P_COORDINATE)
    x_indices = {
        index
        for index, coord in enumerate(charges.coords, start=1)
        if coord.weight == 1 and coord.finite_weight == 0
    }
    total = PoincarePolynomial()
    for element in box_elements(charges, zeta_sign):
        if element.fixed_coords == frozenset({p_index}):
            total = total + PoincarePolynomial.monomial(
                int(2 * element.age) - GlsmCfg.NARROW_SHIFT
            )
        elif element.fixed_coords & x_indices:
            total = total + PoincarePolynomial.monomial(
                GlsmCfg.MIDDLE_DEGREE, middle
            )
    return total
