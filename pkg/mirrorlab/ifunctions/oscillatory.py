"""
Модуль для проверки разложений осцилляторных периодов.

Каждое тождество сравнивает член ряда, полученного из гамма-факторов в
полуцелых точках, с коэффициентом дискового потенциала. Обе стороны
вычисляются точно в кольце Q[√π].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from core.constants import IFunctionCfg
from core.exceptions import DomainError, VerificationError
from exact.scalars import PiHalfScalar, gamma_half_integer
from ifunctions.generators import t_cy, t_lg

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityCheck:
    """
    Результат проверки одного тождества.

    Поля:
    - side: "CY" или "LG".
    - m: Номер члена ряда.
    - lhs: Член осцилляторного периода.
    - rhs: Масштабированный коэффициент дискового потенциала.
    """

    side: str
    m: int
    lhs: PiHalfScalar
    rhs: PiHalfScalar

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        return IFunctionCfg.IDENTITY_STR.format(
            side=self.side,
            m=self.m,
            lhs=self.lhs,
            rhs=self.rhs,
            status=(
                IFunctionCfg.IDENTITY_PASSED
                if self.passed
                else IFunctionCfg.IDENTITY_FAILED
            ),
        )


@dataclass
class OscillatoryReport:
    """Отчёт о проверке тождеств для m = 0..m_max."""

    m_max: int
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [check for check in self.checks if not check.passed]

    def raise_for_failures(self) -> None:
        failures = self.failures()
        if failures:
            raise VerificationError(
                IFunctionCfg.OSCILLATORY_FAILED_ERROR.format(
                    failures="; ".join(str(check) for check in failures)
                ),
                self,
            )


def cy_term(m: int) -> PiHalfScalar:
    """16·(-1)^m·Γ(5m+7/2)·Γ(-m-1/2)^5."""
    return (
        gamma_half_integer(5 * m + Fraction(7, 2))
        * gamma_half_integer(-m - Fraction(1, 2)) ** 5
        * (16 * (-1) ** m)
    )


def lg_term(m: int) -> PiHalfScalar:
    """32·(-1)^m·Γ(-5m-3/2)·Γ(m+1/2)^5."""
    return (
        gamma_half_integer(-5 * m - Fraction(3, 2))
        * gamma_half_integer(m + Fraction(1, 2)) ** 5
        * (32 * (-1) ** m)
    )


def verify_oscillatory_identities(m_max: int) -> OscillatoryReport:
    """
    Проверяет тождества для CY- и LG-периодов при m = 0..m_max.

    CY: cy_term(m) = -32π^3·[q^{m+1/2}]T^CY.
    LG: lg_term(m) = -64π^3·[t^{5m+5/2}]T^LG.

    Возвращает:
        OscillatoryReport: 2·(m_max + 1) проверок.
    """
    if m_max < 0:
        raise DomainError(IFunctionCfg.M_MAX_ERROR.format(m_max=m_max))
    cy_series = t_cy(m_max + 1)
    lg_series = t_lg(5 * m_max + 5)
    report = OscillatoryReport(m_max)
    for m in range(m_max + 1):
        report.checks.append(
            IdentityCheck(
                IFunctionCfg.CY_SIDE,
                m,
                cy_term(m),
                PiHalfScalar(-32 * cy_series[m + Fraction(1, 2)], 6),
            )
        )
        report.checks.append(
            IdentityCheck(
                IFunctionCfg.LG_SIDE,
                m,
                lg_term(m),
                PiHalfScalar(-64 * lg_series[5 * m + Fraction(5, 2)], 6),
            )
        )
    logger.debug(
        IFunctionCfg.OSCILLATORY_LOG.format(
            checks=len(report.checks), failures=len(report.failures())
        )
    )
    return report
