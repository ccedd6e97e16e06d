"""
Модуль с набором приёмочных проверок для команды selftest.

Точные проверки выполняются всегда; численные проверки Меллина-Барнса
пропускаются в режиме --quick.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from branes.algebra import (
    ONE_MINUS_FIFTH,
    ONE_PLUS_INVERSE,
    decompose_for_continuation,
    grade_restriction_check,
    window_half_width,
)
from branes.models import LaurentChar, extended_walcher
from core.constants import CliCfg, GlsmCfg, MellinBarnesCfg
from core.exceptions import MirrorLabError
from enumerative.mirror import (
    cy_components,
    disk_invariants_cy,
    disk_multiple_cover_reduce,
    gw_invariants,
)
from glsm.loop_space import loop_space_data
from glsm.models import PoincarePolynomial, extended_model
from glsm.phases import box_elements
from glsm.state_space import (
    chen_ruan_poincare,
    state_space_poincare_extended,
)
from ifunctions.checks import run_pf_checks
from ifunctions.continuation import lg_continuation_value
from ifunctions.generators import t_cy
from ifunctions.oscillatory import verify_oscillatory_identities
from mellin_barnes.hemisphere import hemisphere_z, model_integrand
from mellin_barnes.models import Precision
from mellin_barnes.normalization import open_closed_factor
from series.evaluation import evaluate

logger = logging.getLogger(__name__)

CR_POLYNOMIAL = PoincarePolynomial({0: 1, 2: 2, 4: 2, 6: 3, 8: 2, 10: 2})
STATE_SPACE_POLYNOMIAL = PoincarePolynomial(
    {0: 2, 2: 2, 3: 408, 4: 2, 6: 2}
)


@dataclass(frozen=True)
class SelftestCase:
    """
    Результат одной проверки.

    Поля:
    - name: Название проверки.
    - passed: Проверка пройдена.
    - detail: Пояснение или текст исключения.
    """

    name: str
    passed: bool
    detail: str = ""


def _pf_annihilation(bits: int) -> tuple[bool, str]:
    failed = [
        check.label
        for kind in CliCfg.SELFTEST_PF_KINDS
        for check in run_pf_checks(kind, CliCfg.SELFTEST_ORDER)
        if not check.passed
    ]
    return not failed, ", ".join(failed)


def _frobenius_oracle(bits: int) -> tuple[bool, str]:
    order = CliCfg.SELFTEST_ORACLE_ORDER
    closed = cy_components(order)
    solved = cy_components(order, CliCfg.SOURCES[1])
    mismatched = [
        str(k)
        for k, (left, right) in enumerate(zip(closed, solved))
        if not left.agrees_with(right)
    ]
    return not mismatched, ", ".join(mismatched)


def _enumerative(bits: int) -> tuple[bool, str]:
    closed = gw_invariants(2)
    disk = disk_invariants_cy(3)
    reduced = disk_multiple_cover_reduce(disk)
    values = (closed[1], closed[2], disk[1], reduced[3])
    expected = (
        Fraction(2875),
        Fraction(4876875, 8),
        Fraction(30),
        Fraction(1530),
    )
    return values == expected, ", ".join(str(value) for value in values)


def _glsm(bits: int) -> tuple[bool, str]:
    charges = extended_model()
    counts = (
        len(box_elements(charges, 1)),
        len(box_elements(charges, -1)),
    )
    polynomials_match = all(
        chen_ruan_poincare(charges, sign) == CR_POLYNOMIAL
        and state_space_poincare_extended(sign) == STATE_SPACE_POLYNOMIAL
        for sign in (1, -1)
    )
    dims = (
        loop_space_data(charges, 1, 1).virtual_dim,
        loop_space_data(charges, 1, Fraction(1, 2)).virtual_dim,
    )
    passed = counts == (3, 11) and polynomials_match and dims == (4, 2)
    return passed, CliCfg.GLSM_DETAIL.format(counts=counts, dims=dims)


def _branes(bits: int) -> tuple[bool, str]:
    brane = extended_walcher()
    f, g = decompose_for_continuation(brane.char)
    window = grade_restriction_check(
        brane.char, window_half_width(extended_model()), brane.offset
    )
    reassembled = f * ONE_PLUS_INVERSE + g * ONE_MINUS_FIFTH
    passed = (
        g == LaurentChar({2: 16})
        and reassembled == brane.char
        and window.passed
    )
    return passed, CliCfg.BRANES_DETAIL.format(f=f, g=g)


def _oscillatory(bits: int) -> tuple[bool, str]:
    report = verify_oscillatory_identities(CliCfg.SELFTEST_M_MAX)
    return report.passed, ", ".join(str(c) for c in report.failures())


def _relative(value: object, expected: object) -> object:
    return abs(value - expected) / abs(expected)


def _open_closed(bits: int) -> tuple[bool, str]:
    """Левое замыкание против 64π^3·T^CY."""
    q = mpmath.mpf(CliCfg.SELFTEST_SMALL_Q) * mpmath.expj(
        CliCfg.SELFTEST_ARG
    )
    prec = Precision(bits)
    model = GlsmCfg.EXTENDED_MODEL
    brane = extended_walcher()
    value = hemisphere_z(model, brane, q, prec).value
    with mpmath.workprec(bits):
        log_q = model_integrand(model, brane.char, q).log_q()
        expected = open_closed_factor() * evaluate(
            t_cy(CliCfg.SELFTEST_SERIES_ORDER), q, bits, log_q
        )
        error = _relative(value, expected)
    return error < CliCfg.SELFTEST_TOLERANCE, mpmath.nstr(error, 5)


def _wallcross(bits: int) -> tuple[bool, str]:
    """Правое замыкание против 64π^3·(T^LG + Σ w_m·I^LG_{m-1})."""
    q = mpmath.mpf(CliCfg.SELFTEST_LARGE_Q) * mpmath.expj(
        CliCfg.SELFTEST_ARG
    )
    prec = Precision(bits)
    model = GlsmCfg.EXTENDED_MODEL
    brane = extended_walcher()
    value = hemisphere_z(
        model, brane, q, prec, MellinBarnesCfg.RESIDUES
    ).value
    with mpmath.workprec(bits):
        log_q = model_integrand(model, brane.char, q).log_q()
        expected = open_closed_factor() * lg_continuation_value(
            mpmath.exp(-log_q / 5), bits
        )
        error = _relative(value, expected)
    return error < CliCfg.SELFTEST_TOLERANCE, mpmath.nstr(error, 5)


EXACT_CASES: tuple[tuple[str, Callable[[int], tuple[bool, str]]], ...] = (
    (CliCfg.CASE_PF, _pf_annihilation),
    (CliCfg.CASE_ORACLE, _frobenius_oracle),
    (CliCfg.CASE_ENUMERATIVE, _enumerative),
    (CliCfg.CASE_GLSM, _glsm),
    (CliCfg.CASE_BRANES, _branes),
    (CliCfg.CASE_OSCILLATORY, _oscillatory),
)

NUMERIC_CASES: tuple[tuple[str, Callable[[int], tuple[bool, str]]], ...] = (
    (CliCfg.CASE_OPEN_CLOSED, _open_closed),
    (CliCfg.CASE_WALLCROSS, _wallcross),
)


def run_selftest(quick: bool, bits: int) -> list[SelftestCase]:
    """
    Выполняет проверки и возвращает их результаты.

    Исключения библиотеки не прерывают набор: проверка, поднявшая
    MirrorLabError, считается непройденной.
    """
    cases = EXACT_CASES if quick else EXACT_CASES + NUMERIC_CASES
    results = []
    for name, check in cases:
        try:
            passed, detail = check(bits)
        except MirrorLabError as error:
            passed, detail = False, str(error)
        logger.info(
            CliCfg.SELFTEST_LOG.format(name=name, passed=passed)
        )
        results.append(SelftestCase(name, passed, detail))
    return results
