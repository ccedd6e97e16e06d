"""
Модуль с полусферной статсуммой встроенных моделей.

Z(𝔅) = -(1/2πi)·∫ ∏Γ(D_i·σ + q_i/2)·Ch(σ)·q^{-σ}dσ; для квинтики
множители Γ(σ)^5·Γ(1-5σ), для расширенной модели к ним добавляются
Γ(σ+1/2)·Γ(-σ+1/2).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import log
from typing import Optional

from branes.algebra import (
    ONE_MINUS_FIFTH,
    ONE_PLUS_INVERSE,
    decompose_for_continuation,
    grade_restriction_check,
    window_half_width,
)
from branes.models import Brane, LaurentChar
from config import settings
from core.constants import GlsmCfg, MellinBarnesCfg
from core.exceptions import DomainError
from glsm.models import MODELS, GlsmCharges
from mellin_barnes.contour import contour_integrate
from mellin_barnes.models import MBIntegrand, MBResult, Precision
from mellin_barnes.normalization import hemisphere_sign
from mellin_barnes.residues import conifold_modulus, residue_sum

logger = logging.getLogger(__name__)


def model_charges(model: str) -> GlsmCharges:
    try:
        return MODELS[model]()
    except KeyError as error:
        raise DomainError(
            GlsmCfg.UNKNOWN_MODEL_ERROR.format(
                model=model, known=", ".join(MODELS)
            )
        ) from error


def model_integrand(
    model: str,
    char: LaurentChar,
    q: object,
    arg: Optional[float] = None,
    delta: Fraction = settings.CONTOUR_DELTA,
) -> MBIntegrand:
    """Подынтегральное выражение модели model со вставкой char."""
    return MBIntegrand.from_charges(
        model_charges(model), char, q, delta, arg
    )


def closure_side(ig: MBIntegrand) -> str:
    """Сторона замыкания, сходящаяся при данном |q|."""
    if abs(complex(ig.q_value)) < conifold_modulus(ig):
        return MellinBarnesCfg.LEFT
    return MellinBarnesCfg.RIGHT


def _near_conifold(ig: MBIntegrand) -> bool:
    ratio = abs(complex(ig.q_value)) / conifold_modulus(ig)
    return abs(log(ratio)) < log(MellinBarnesCfg.RESIDUE_MARGIN)


def _check_window(model: str, brane: Brane) -> None:
    charges = model_charges(model)
    verdict = grade_restriction_check(
        brane.char, window_half_width(charges), brane.offset
    )
    if not verdict.passed:
        logger.warning(
            MellinBarnesCfg.WINDOW_WARNING.format(
                brane=brane.label or brane.char,
                model=model,
                violations=verdict.violations,
            )
        )


def bare_integral(
    ig: MBIntegrand,
    prec: Precision,
    method: str = MellinBarnesCfg.AUTO,
    n_terms: Optional[int] = None,
) -> MBResult:
    """
    (1/2πi)·∫ ig(σ)dσ выбранным методом.

    В режиме auto вычеты суммируются со сходящейся стороны, а вблизи
    |q| = conifold_modulus используется контурный интеграл.
    """
    if method == MellinBarnesCfg.CONTOUR:
        return contour_integrate(ig, prec)
    if method == MellinBarnesCfg.RESIDUES:
        return residue_sum(ig, closure_side(ig), n_terms, prec)
    if method == MellinBarnesCfg.AUTO:
        if _near_conifold(ig):
            return contour_integrate(ig, prec)
        return residue_sum(ig, closure_side(ig), n_terms, prec)
    raise DomainError(MellinBarnesCfg.METHOD_ERROR.format(method=method))


def hemisphere_z(
    model: str,
    brane: Brane,
    q: object,
    prec: Precision | None = None,
    method: str = MellinBarnesCfg.AUTO,
    arg: Optional[float] = None,
    n_terms: Optional[int] = None,
) -> MBResult:
    """
    Центральный заряд браны brane в модели model.

    Параметры:
        model: "quintic" или "extended".
        brane: Брана; вне окна стены выдаётся предупреждение.
        q: Комплексное значение q.
        prec: Точность.
        method: "auto", "contour" или "residues".
        arg: Ветвь arg q; по умолчанию главная.
        n_terms: Число групп полюсов для метода residues.

    Возвращает:
        MBResult: Значение с оценкой погрешности.
    """
    prec = prec or Precision()
    _check_window(model, brane)
    ig = model_integrand(model, brane.char, q, arg)
    result = bare_integral(ig, prec, method, n_terms)
    logger.info(
        MellinBarnesCfg.HEMISPHERE_LOG.format(
            model=model,
            brane=brane.label,
            q=q,
            method=result.method,
            value=result.value,
        )
    )
    return result.scaled(hemisphere_sign(), prec)


def wallcross_split(
    model: str,
    brane: Brane,
    q: object,
    prec: Precision | None = None,
    arg: Optional[float] = None,
    n_terms: Optional[int] = None,
) -> tuple[MBResult, MBResult]:
    """
    Разложение Z по char = f·(1 + T^{-1}) + g·(1 - T^{-5}).

    Каждое слагаемое считается правым замыканием: первая вставка
    сокращает полуцелые полюсы Γ(-σ+1/2), вторая - полюсы Γ(1-5σ).
    Сумма двух значений совпадает с hemisphere_z.
    """
    prec = prec or Precision()
    f, g = decompose_for_continuation(brane.char)
    sign = hemisphere_sign()
    parts = []
    for insertion in (f * ONE_PLUS_INVERSE, g * ONE_MINUS_FIFTH):
        ig = model_integrand(model, insertion, q, arg)
        part = residue_sum(ig, MellinBarnesCfg.RIGHT, n_terms, prec)
        parts.append(part.scaled(sign, prec))
    return parts[0], parts[1]
