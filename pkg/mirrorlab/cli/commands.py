"""
Модуль с обработчиками подкоманд.

Каждый обработчик принимает разобранные аргументы и возвращает
CommandResult; вывод и коды возврата остаются за cli.main.
"""

from __future__ import annotations

import argparse
import logging
from typing import Callable

import mpmath

from branes.algebra import (
    decompose_for_continuation,
    grade_restriction_check,
    window_half_width,
)
from branes.models import extended_walcher
from branes.serializers import (
    BraneSerializer,
    LaurentCharField,
    brane_from_argument,
)
from cli.renderers import CommandResult, complex_fields, mp_string
from cli.selftest import run_selftest
from core.constants import (
    CliCfg,
    GlsmCfg,
    IFunctionCfg,
    MellinBarnesCfg,
    SerializersCfg,
)
from core.exceptions import DomainError
from core.serializers import rational_pair
from enumerative.mirror import (
    disk_invariants_cy,
    disk_multiple_cover_reduce,
    gw_invariants,
    lg_disk_table,
    lg_mirror_series,
    multiple_cover_reduce,
)
from enumerative.models import InvariantTable
from enumerative.serializers import InvariantTableSerializer
from glsm.loop_space import effective_degrees, loop_space_data
from glsm.phases import box_elements, fan_relation, minimal_anticones
from glsm.state_space import (
    chen_ruan_poincare,
    state_space_poincare_extended,
)
from ifunctions.checks import run_pf_checks
from ifunctions.continuation import lg_continuation_value
from ifunctions.generators import i_cy, i_lg, t_cy, t_lg
from ifunctions.oscillatory import verify_oscillatory_identities
from mellin_barnes.hemisphere import (
    hemisphere_z,
    model_charges,
    model_integrand,
    wallcross_split,
)
from mellin_barnes.models import Precision
from mellin_barnes.normalization import open_closed_factor
from series.serializers import PuiseuxSeriesSerializer

logger = logging.getLogger(__name__)


def parse_q(text: str, bits: int) -> object:
    """Значение q из строки: вещественное или комплексное в записи Python."""
    with mpmath.workprec(bits):
        try:
            return mpmath.mpf(text)
        except ValueError:
            pass
        try:
            return mpmath.mpc(complex(text.replace(" ", "")))
        except ValueError as error:
            raise DomainError(CliCfg.Q_ERROR.format(value=text)) from error


def _series_result(series) -> CommandResult:
    payload = PuiseuxSeriesSerializer(series).data
    rows = payload[SerializersCfg.TERMS]
    plot = [
        (row[0] / row[1], row[2] / row[3]) for row in rows if row[4] == 0
    ]
    return CommandResult(payload, list(CliCfg.SERIES_HEADER), rows, plot)


def series_command(args: argparse.Namespace) -> CommandResult:
    """Ряды I^CY_k, I^LG_k, T^CY, T^LG до порядка --order."""
    builders = {
        CliCfg.I_CY: lambda: i_cy(args.k, args.order),
        CliCfg.I_LG: lambda: i_lg(args.k, args.order),
        CliCfg.T_CY: lambda: t_cy(args.order),
        CliCfg.T_LG: lambda: t_lg(args.order),
    }
    result = _series_result(builders[args.kind]())
    result.payload = {
        CliCfg.KIND: args.kind,
        CliCfg.K: args.k,
        **result.payload,
    }
    return result


def pf_check_command(args: argparse.Namespace) -> CommandResult:
    checks = run_pf_checks(args.kind, args.order)
    failed = [check.label for check in checks if not check.passed]
    payload = {
        CliCfg.KIND: args.kind,
        CliCfg.ORDER: rational_pair(args.order),
        CliCfg.PASSED: not failed,
        CliCfg.CHECKS: [
            {
                CliCfg.LABEL: check.label,
                CliCfg.PASSED: check.passed,
                CliCfg.RESIDUAL: PuiseuxSeriesSerializer(check.residual).data,
            }
            for check in checks
        ],
    }
    rows = [[check.label, check.passed] for check in checks]
    result = CommandResult(payload, list(CliCfg.CHECK_HEADER), rows)
    if failed:
        result.failure = CliCfg.PF_CHECK_FAILED.format(
            kind=args.kind, labels=", ".join(failed)
        )
    return result


def _table_result(table: InvariantTable) -> CommandResult:
    payload = InvariantTableSerializer(table).data
    rows = payload[SerializersCfg.ENTRIES]
    plot = [(row[0] / row[1], row[2] / row[3]) for row in rows]
    return CommandResult(payload, list(CliCfg.TABLE_HEADER), rows, plot)


def gw_command(args: argparse.Namespace) -> CommandResult:
    table = gw_invariants(args.max_degree, args.source)
    if args.reduced:
        table = multiple_cover_reduce(table)
    return _table_result(table)


def disk_command(args: argparse.Namespace) -> CommandResult:
    table = disk_invariants_cy(args.max_degree, args.source)
    if args.reduced:
        table = disk_multiple_cover_reduce(table)
    return _table_result(table)


def lg_command(args: argparse.Namespace) -> CommandResult:
    """LG-отображение τ(t) и гипотетическая таблица F^LG_{0,1}."""
    tau, _ = lg_mirror_series(args.order)
    result = _table_result(lg_disk_table(args.order))
    result.payload[CliCfg.MIRROR_MAP] = (
        PuiseuxSeriesSerializer(tau).data
    )
    return result


def _box_payload(element) -> dict:
    a, sign = element.group_element
    return {
        CliCfg.ELEMENT: [rational_pair(a), sign],
        CliCfg.AGE: rational_pair(element.age),
        CliCfg.FIXED: sorted(element.fixed_coords),
        CliCfg.LABEL: element.component_label,
    }


def _loop_payload(data) -> dict:
    return {
        CliCfg.DEGREE: rational_pair(data.degree),
        CliCfg.DIM_V: data.dim_V,
        CliCfg.DIM_W: data.dim_W,
        CliCfg.DIM_L: data.dim_L,
        CliCfg.RANK_E: data.rank_E,
        CliCfg.VIRTUAL_DIM: data.virtual_dim,
    }


def _poincare_payload(polynomial) -> dict[str, int]:
    return {str(exponent): coeff for exponent, coeff in polynomial}


def glsm_command(args: argparse.Namespace) -> CommandResult:
    """Антиконусы, Box, многочлены Пуанкаре и пространства петель фазы."""
    charges = model_charges(args.model)
    degrees = args.degrees or effective_degrees(
        charges, args.zeta, CliCfg.DEFAULT_DEGREES
    )
    elements = box_elements(charges, args.zeta)
    payload = {
        CliCfg.MODEL: args.model,
        CliCfg.PHASE: args.zeta,
        CliCfg.ANTICONES: sorted(
            sorted(anticone)
            for anticone in minimal_anticones(charges, args.zeta)
        ),
        CliCfg.FAN_RELATION: list(fan_relation(charges)),
        CliCfg.BOX: [_box_payload(element) for element in elements],
        CliCfg.CR_POINCARE: _poincare_payload(
            chen_ruan_poincare(charges, args.zeta)
        ),
        CliCfg.LOOP_SPACES: [
            _loop_payload(loop_space_data(charges, args.zeta, degree))
            for degree in degrees
        ],
    }
    if args.model == GlsmCfg.EXTENDED_MODEL:
        payload[CliCfg.STATE_SPACE] = _poincare_payload(
            state_space_poincare_extended(args.zeta)
        )
    rows = [
        [
            element.component_label,
            *rational_pair(element.age),
            " ".join(str(index) for index in sorted(element.fixed_coords)),
        ]
        for element in elements
    ]
    return CommandResult(payload, list(CliCfg.BOX_HEADER), rows)


def brane_command(args: argparse.Namespace) -> CommandResult:
    brane = brane_from_argument(args.brane, args.offset)
    char_field = LaurentCharField()
    if args.action == CliCfg.DECOMPOSE:
        f, g = decompose_for_continuation(brane.char)
        payload = {
            CliCfg.F: char_field.to_representation(f),
            CliCfg.G: char_field.to_representation(g),
        }
        rows = [[CliCfg.F, str(f)], [CliCfg.G, str(g)]]
        return CommandResult(payload, list(CliCfg.PART_HEADER), rows)
    half_width = args.half_width
    if half_width is None:
        half_width = window_half_width(model_charges(args.model))
    verdict = grade_restriction_check(brane.char, half_width, brane.offset)
    payload = BraneSerializer(brane).data
    payload[CliCfg.WINDOW] = {
        CliCfg.HALF_WIDTH: rational_pair(half_width),
        CliCfg.PASSED: verdict.passed,
        CliCfg.VIOLATIONS: list(verdict.violations),
    }
    rows = [[exponent, coeff] for exponent, coeff in brane.char]
    return CommandResult(payload, list(CliCfg.CHAR_HEADER), rows)


def central_charge_command(args: argparse.Namespace) -> CommandResult:
    """Z(𝔅) для модели и браны в точке q."""
    brane = brane_from_argument(args.brane)
    prec = Precision(args.bits)
    q = parse_q(args.q, args.bits)
    result = hemisphere_z(
        args.model, brane, q, prec, args.method, args.arg, args.n_terms
    )
    payload = {
        CliCfg.MODEL: args.model,
        CliCfg.BRANE: brane.label,
        CliCfg.Q: args.q,
        CliCfg.ARG: args.arg,
        **complex_fields(result.value, args.bits),
        CliCfg.EST_ERROR: mp_string(result.est_error, args.bits),
        CliCfg.METHOD: result.method,
        CliCfg.N_TERMS: result.n_terms,
    }
    rows = [[payload[CliCfg.VALUE_RE], payload[CliCfg.VALUE_IM]]]
    return CommandResult(payload, list(CliCfg.VALUE_HEADER), rows)


def wallcross_command(args: argparse.Namespace) -> CommandResult:
    """
    Продолжение браны Уолчера через стену.

    Правое замыкание целиком, его разложение на два слагаемых и значение
    64π^3·(T^LG + Σ w_m·I^LG_{m-1}) в t = q^{-1/5}.
    """
    brane = extended_walcher()
    prec = Precision(args.bits)
    q = parse_q(args.q, args.bits)
    model = GlsmCfg.EXTENDED_MODEL
    total = hemisphere_z(
        model, brane, q, prec, MellinBarnesCfg.RESIDUES, args.arg
    )
    z_f, z_g = wallcross_split(model, brane, q, prec, args.arg)
    with mpmath.workprec(args.bits + MellinBarnesCfg.GUARD_BITS):
        log_q = model_integrand(model, brane.char, q, args.arg).log_q()
        t = mpmath.exp(-log_q / 5)
        series_value = open_closed_factor() * lg_continuation_value(
            t, args.bits, args.convention
        )
        difference = abs(total.value - series_value) / abs(series_value)
    payload = {
        CliCfg.Q: args.q,
        CliCfg.CONVENTION: args.convention,
        CliCfg.TOTAL: complex_fields(total.value, args.bits),
        CliCfg.F: complex_fields(z_f.value, args.bits),
        CliCfg.G: complex_fields(z_g.value, args.bits),
        CliCfg.SERIES_VALUE: complex_fields(series_value, args.bits),
        CliCfg.REL_DIFFERENCE: mp_string(difference, args.bits),
    }
    rows = [
        [name, values[CliCfg.VALUE_RE], values[CliCfg.VALUE_IM]]
        for name, values in (
            (CliCfg.TOTAL, payload[CliCfg.TOTAL]),
            (CliCfg.F, payload[CliCfg.F]),
            (CliCfg.G, payload[CliCfg.G]),
            (CliCfg.SERIES_VALUE, payload[CliCfg.SERIES_VALUE]),
        )
    ]
    return CommandResult(payload, list(CliCfg.NAMED_VALUE_HEADER), rows)


def oscillatory_command(args: argparse.Namespace) -> CommandResult:
    report = verify_oscillatory_identities(args.m_max)
    payload = {
        CliCfg.M_MAX: report.m_max,
        CliCfg.PASSED: report.passed,
        CliCfg.CHECKS: [
            {
                CliCfg.SIDE: check.side,
                CliCfg.M: check.m,
                CliCfg.LHS: str(check.lhs),
                CliCfg.RHS: str(check.rhs),
                CliCfg.PASSED: check.passed,
            }
            for check in report.checks
        ],
    }
    rows = [
        [check.side, check.m, str(check.lhs), str(check.rhs), check.passed]
        for check in report.checks
    ]
    result = CommandResult(payload, list(CliCfg.IDENTITY_HEADER), rows)
    if not report.passed:
        result.failure = IFunctionCfg.OSCILLATORY_FAILED_ERROR.format(
            failures="; ".join(str(check) for check in report.failures())
        )
    return result


def selftest_command(args: argparse.Namespace) -> CommandResult:
    cases = run_selftest(args.quick, args.bits)
    payload = {
        CliCfg.PASSED: all(case.passed for case in cases),
        CliCfg.CHECKS: [
            {
                CliCfg.LABEL: case.name,
                CliCfg.PASSED: case.passed,
                CliCfg.DETAIL: case.detail,
            }
            for case in cases
        ],
    }
    rows = [[case.name, case.passed] for case in cases]
    result = CommandResult(payload, list(CliCfg.CHECK_HEADER), rows)
    failed = [case.name for case in cases if not case.passed]
    if failed:
        result.failure = CliCfg.SELFTEST_FAILED.format(
            names=", ".join(failed)
        )
    return result


HANDLERS: dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    CliCfg.SERIES: series_command,
    CliCfg.PF_CHECK: pf_check_command,
    CliCfg.GW: gw_command,
    CliCfg.DISK: disk_command,
    CliCfg.LG: lg_command,
    CliCfg.GLSM: glsm_command,
    CliCfg.BRANE: brane_command,
    CliCfg.CENTRAL_CHARGE: central_charge_command,
    CliCfg.WALLCROSS: wallcross_command,
    CliCfg.OSCILLATORY: oscillatory_command,
    CliCfg.SELFTEST: selftest_command,
}
