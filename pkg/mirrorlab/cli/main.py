"""Модуль с точкой входа командной строки."""

from __future__ import annotations

import logging
import sys
from typing import Optional, Sequence

from cli.commands import HANDLERS
from cli.parsers import UsageError, build_parser
from cli.renderers import render, write_plot_data, write_text
from config import settings
from core.constants import CliCfg, LoggingCfg
from core.exceptions import (
    ConvergenceError,
    DomainError,
    InternalConsistencyError,
    OutputError,
    VerificationError,
)

logger = logging.getLogger(__name__)


def configure_logging() -> None:
    logging.basicConfig(format=LoggingCfg.FORMAT, level=settings.LOG_LEVEL)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Разбирает аргументы, выполняет подкоманду и выводит результат.

    Параметры:
        argv: Аргументы без имени программы; по умолчанию sys.argv[1:].

    Возвращает:
        int: 0 при успехе, 1 при ошибке предметной области, 2 при
    непройденной проверке, 64 при ошибке в аргументах.
    """
    configure_logging()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as error:
        sys.stderr.write(str(error))
        return CliCfg.EXIT_USAGE
    try:
        result = HANDLERS[args.command](args)
        write_text(
            render(args.command, result, args.format),
            args.output,
            sys.stdout,
        )
        if args.plot_data is not None:
            write_plot_data(result, args.plot_data)
        if result.failure is not None:
            raise VerificationError(result.failure, result)
    except VerificationError as error:
        logger.error(CliCfg.VERIFICATION_LOG.format(error=error))
        return CliCfg.EXIT_VERIFICATION
    except (
        DomainError,
        InternalConsistencyError,
        ConvergenceError,
        OutputError,
    ) as error:
        logger.error(CliCfg.DOMAIN_LOG.format(error=error))
        return CliCfg.EXIT_DOMAIN
    return CliCfg.EXIT_OK
