"""Модуль с моделью таблицы перечислительных инвариантов."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from core.constants import EnumerativeCfg
from series.models import PuiseuxSeries


@dataclass(frozen=True)
class InvariantTable:
    """
    Таблица инвариантов по степеням.

    Поля:
    - kind: Вид таблицы (gw_closed, disk_cy, disk_lg и редуцированные
    варианты).
    - entries: Отображение степень -> значение. Для дисковых таблиц
    степень d нечётна и отвечает показателю d/2.
    - truncation: Наибольшая достоверная степень.
    - conjectural: Признак таблиц, вычисленных по гипотетической формуле.
    """

    kind: str
    entries: dict[Fraction, Fraction] = field(default_factory=dict)
    truncation: Fraction = Fraction(0)
    conjectural: bool = False

    def __getitem__(self, degree: int | Fraction) -> Fraction:
        return self.entries.get(Fraction(degree), Fraction(0))

    def __iter__(self):
        return iter(sorted(self.entries.items()))

    def __len__(self) -> int:
        return len(self.entries)

    def degrees(self) -> list[Fraction]:
        return sorted(self.entries)

    def restricted(self, max_degree: int | Fraction) -> InvariantTable:
        """Таблица, ограниченная степенями не выше max_degree."""
        bound = Fraction(max_degree)
        return InvariantTable(
            self.kind,
            {d: value for d, value in self.entries.items() if d <= bound},
            min(self.truncation, bound),
            self.conjectural,
        )

    def as_series(self) -> PuiseuxSeries:
        """
        Производящий ряд Σ N_d·Q^{e(d)}.

        Для дисковых таблиц e(d) = d/2, иначе e(d) = d.
        """
        scale = (
            Fraction(1, 2)
            if self.kind in EnumerativeCfg.DISK_KINDS
            else Fraction(1)
        )
        return PuiseuxSeries(
            {d * scale: value for d, value in self.entries.items()},
            (self.truncation + 1) * scale,
        )

    def __str__(self) -> str:
        return EnumerativeCfg.TABLE_STR.format(
            kind=self.kind,
            entries=", ".join(
                "{d}: {v}".format(d=d, v=v) for d, v in self
            ),
            truncation=self.truncation,
        )
