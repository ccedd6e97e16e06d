"""Модуль с выводом результатов команд в JSON и CSV."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import log10
from pathlib import Path
from typing import Optional

import mpmath

from core.constants import CliCfg
from core.exceptions import OutputError


@dataclass
class CommandResult:
    """
    Результат подкоманды.

    Поля:
    - payload: Тело JSON-ответа без служебных полей.
    - header: Заголовок CSV-таблицы.
    - rows: Строки CSV-таблицы.
    - plot: Точки (x, y) для --emit-plot-data.
    - failure: Сообщение о непройденной проверке; такой результат
    выводится, но завершается с кодом 2.
    """

    payload: dict
    header: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    plot: list[tuple[float, float]] = field(default_factory=list)
    failure: Optional[str] = None


def number_digits(bits: int) -> int:
    return int(bits * log10(2))


def mp_string(value: object, bits: int) -> str:
    """Десятичная запись mpf с числом знаков, отвечающим bits."""
    return mpmath.nstr(value, number_digits(bits))


def complex_fields(value: object, bits: int) -> dict[str, str]:
    value = mpmath.mpmathify(value)
    return {
        CliCfg.VALUE_RE: mp_string(mpmath.re(value), bits),
        CliCfg.VALUE_IM: mp_string(mpmath.im(value), bits),
    }


def render_json(command: str, result: CommandResult) -> str:
    document = {CliCfg.SCHEMA: CliCfg.SCHEMA_VERSION, CliCfg.COMMAND: command}
    document.update(result.payload)
    return json.dumps(document, ensure_ascii=False, indent=2) + "\n"


def render_csv(result: CommandResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if result.header:
        writer.writerow(result.header)
    writer.writerows(result.rows)
    return buffer.getvalue()


def render(command: str, result: CommandResult, output_format: str) -> str:
    if output_format == CliCfg.CSV:
        return render_csv(result)
    return render_json(command, result)


def _write_file(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as error:
        raise OutputError(
            CliCfg.OUTPUT_ERROR.format(path=path, error=error), path
        ) from error


def write_text(text: str, path: Optional[str], stream: io.TextIOBase) -> None:
    """Пишет text в файл path или, если путь не задан, в stream."""
    if path is None:
        stream.write(text)
        return
    _write_file(path, text)


def write_plot_data(result: CommandResult, path: str) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CliCfg.PLOT_HEADER)
    writer.writerows(result.plot)
    _write_file(path, buffer.getvalue())
