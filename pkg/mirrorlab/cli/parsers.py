"""Модуль с разбором аргументов командной строки."""

from __future__ import annotations

import argparse
from fractions import Fraction

from branes.models import FIXTURES
from config import settings
from core.constants import CliCfg, IFunctionCfg, MellinBarnesCfg
from glsm.models import MODELS
from ifunctions.checks import PF_CHECKS


class UsageError(Exception):
    """Ошибка разбора аргументов; сообщение уже содержит текст usage."""


class CliParser(argparse.ArgumentParser):
    """ArgumentParser, который не завершает процесс при ошибке разбора."""

    def error(self, message: str) -> None:
        raise UsageError(
            CliCfg.USAGE_ERROR.format(usage=self.format_usage(), error=message)
        )


def rational(value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as error:
        raise argparse.ArgumentTypeError(
            CliCfg.RATIONAL_ERROR.format(value=value)
        ) from error


def rational_list(value: str) -> list[Fraction]:
    return [rational(item) for item in value.split(",") if item.strip()]


def zeta(value: str) -> int:
    if value not in CliCfg.ZETA_VALUES:
        raise argparse.ArgumentTypeError(
            CliCfg.ZETA_ERROR.format(value=value)
        )
    return int(value)


def _global_flags(with_defaults: bool) -> CliParser:
    """
    Общие флаги для корневого парсера и подкоманд.

    В подкомандах значения по умолчанию подавлены, чтобы флаг, указанный
    до имени подкоманды, не перезаписывался.
    """
    parser = CliParser(add_help=False)

    def default(value):
        return value if with_defaults else argparse.SUPPRESS

    parser.add_argument(
        "--order",
        type=rational,
        default=default(settings.ORDER),
        help=CliCfg.ORDER_HELP,
    )
    parser.add_argument(
        "--bits",
        type=int,
        default=default(settings.BITS),
        help=CliCfg.BITS_HELP,
    )
    parser.add_argument(
        "--format",
        choices=CliCfg.FORMATS,
        default=default(CliCfg.JSON),
        help=CliCfg.FORMAT_HELP,
    )
    parser.add_argument(
        "--output", default=default(None), help=CliCfg.OUTPUT_HELP
    )
    parser.add_argument(
        "--emit-plot-data",
        dest="plot_data",
        default=default(None),
        help=CliCfg.PLOT_HELP,
    )
    return parser


def _add_series(subparsers, common: CliParser) -> None:
    parser = subparsers.add_parser(
        CliCfg.SERIES, parents=[common], help=CliCfg.SERIES_HELP
    )
    parser.add_argument("kind", choices=CliCfg.SERIES_KINDS)
    parser.add_argument("--k", type=int, default=0, help=CliCfg.K_HELP)


def _add_tables(subparsers, common: CliParser) -> None:
    parser = subparsers.add_parser(
        CliCfg.PF_CHECK, parents=[common], help=CliCfg.PF_CHECK_HELP
    )
    parser.add_argument("kind", choices=tuple(PF_CHECKS))
    for name, help_text in (
        (CliCfg.GW, CliCfg.GW_HELP),
        (CliCfg.DISK, CliCfg.DISK_HELP),
    ):
        parser = subparsers.add_parser(
            name, parents=[common], help=help_text
        )
        parser.add_argument(
            "--max-degree",
            type=int,
            default=CliCfg.DEFAULT_MAX_DEGREE,
            help=CliCfg.MAX_DEGREE_HELP,
        )
        parser.add_argument(
            "--reduced", action="store_true", help=CliCfg.REDUCED_HELP
        )
        parser.add_argument(
            "--source",
            choices=CliCfg.SOURCES,
            default=CliCfg.SOURCES[0],
            help=CliCfg.SOURCE_HELP,
        )
    subparsers.add_parser(CliCfg.LG, parents=[common], help=CliCfg.LG_HELP)
    parser = subparsers.add_parser(
        CliCfg.OSCILLATORY, parents=[common], help=CliCfg.OSCILLATORY_HELP
    )
    parser.add_argument(
        "--m-max",
        type=int,
        default=CliCfg.DEFAULT_M_MAX,
        help=CliCfg.M_MAX_HELP,
    )


def _add_glsm(subparsers, common: CliParser) -> None:
    parser = subparsers.add_parser(
        CliCfg.GLSM, parents=[common], help=CliCfg.GLSM_HELP
    )
    parser.add_argument("action", choices=(CliCfg.INSPECT,))
    parser.add_argument(
        "--model", choices=tuple(MODELS), default=CliCfg.DEFAULT_MODEL
    )
    parser.add_argument("--zeta", type=zeta, default=1, help=CliCfg.ZETA_HELP)
    parser.add_argument(
        "--degrees", type=rational_list, help=CliCfg.DEGREES_HELP
    )


def _add_brane_flags(parser: CliParser) -> None:
    parser.add_argument(
        "--brane",
        default=CliCfg.DEFAULT_BRANE,
        help=CliCfg.BRANE_HELP.format(known=", ".join(FIXTURES)),
    )
    parser.add_argument(
        "--model", choices=tuple(MODELS), default=CliCfg.DEFAULT_MODEL
    )


def _add_branes(subparsers, common: CliParser) -> None:
    parser = subparsers.add_parser(
        CliCfg.BRANE, parents=[common], help=CliCfg.BRANE_COMMAND_HELP
    )
    parser.add_argument("action", choices=CliCfg.BRANE_ACTIONS)
    _add_brane_flags(parser)
    parser.add_argument("--half-width", type=rational)
    parser.add_argument("--offset", type=rational)


def _add_numerics(subparsers, common: CliParser) -> None:
    parser = subparsers.add_parser(
        CliCfg.CENTRAL_CHARGE,
        parents=[common],
        help=CliCfg.CENTRAL_CHARGE_HELP,
    )
    _add_brane_flags(parser)
    parser.add_argument("--q", required=True, help=CliCfg.Q_HELP)
    parser.add_argument("--arg", type=float, help=CliCfg.ARG_HELP)
    parser.add_argument(
        "--method",
        choices=(
            MellinBarnesCfg.AUTO,
            MellinBarnesCfg.CONTOUR,
            MellinBarnesCfg.RESIDUES,
        ),
        default=MellinBarnesCfg.AUTO,
    )
    parser.add_argument("--n-terms", type=int, help=CliCfg.N_TERMS_HELP)
    parser = subparsers.add_parser(
        CliCfg.WALLCROSS, parents=[common], help=CliCfg.WALLCROSS_HELP
    )
    parser.add_argument("--q", required=True, help=CliCfg.Q_HELP)
    parser.add_argument("--arg", type=float, help=CliCfg.ARG_HELP)
    parser.add_argument(
        "--convention",
        choices=(IFunctionCfg.PRINCIPAL, IFunctionCfg.CONJUGATE),
        default=IFunctionCfg.PRINCIPAL,
    )
    parser = subparsers.add_parser(
        CliCfg.SELFTEST, parents=[common], help=CliCfg.SELFTEST_HELP
    )
    parser.add_argument(
        "--quick", action="store_true", help=CliCfg.QUICK_HELP
    )


def build_parser() -> CliParser:
    """Корневой парсер со всеми подкомандами."""
    parser = CliParser(
        prog=CliCfg.PROG,
        description=CliCfg.DESCRIPTION,
        parents=[_global_flags(with_defaults=True)],
    )
    common = _global_flags(with_defaults=False)
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=CliParser
    )
    _add_series(subparsers, common)
    _add_tables(subparsers, common)
    _add_glsm(subparsers, common)
    _add_branes(subparsers, common)
    _add_numerics(subparsers, common)
    return parser
