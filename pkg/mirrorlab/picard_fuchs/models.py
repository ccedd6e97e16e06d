"""Модуль с моделью дифференциального оператора от θ = q d/dq."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

from core.constants import PicardFuchsCfg
from core.exceptions import DomainError
from exact.scalars import Rational, as_fraction, binomial
from series.models import PuiseuxLogSeries, PuiseuxSeries, min_order

Coefficient = Union[PuiseuxSeries, Rational]


class ThetaOperator:
    """
    Некоммутативный многочлен Σ c_j(q)·θ^j с коэффициентами слева.

    Поля:
    - terms: Отображение степень θ -> коэффициент (ряд Пюизё по q).

    Композиция приводит результат к нормальному виду с помощью правила
    θ·q^e = q^e·(θ + e).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coefficient] | None = None) -> None:
        cleaned: dict[int, PuiseuxSeries] = {}
        for power, coeff in (terms or {}).items():
            if power < 0:
                raise DomainError(
                    PicardFuchsCfg.NEGATIVE_THETA_POWER_ERROR.format(
                        power=power
                    )
                )
            if not isinstance(coeff, PuiseuxSeries):
                coeff = PuiseuxSeries.constant(coeff)
            if not coeff.is_zero():
                cleaned[power] = coeff
        self._terms = dict(sorted(cleaned.items()))

    @classmethod
    def theta(cls) -> ThetaOperator:
        return cls({1: 1})

    @classmethod
    def multiplication(cls, coeff: Coefficient) -> ThetaOperator:
        return cls({0: coeff})

    @classmethod
    def from_shift_polynomials(
        cls, polynomials: Mapping[Rational, Sequence[Rational]]
    ) -> ThetaOperator:
        """
        Строит оператор Σ_s q^s·P_s(θ) по многочленам P_s.

        Параметры:
            polynomials: Отображение сдвиг s -> коэффициенты P_s по
            возрастанию степени θ.
        """
        terms: dict[int, dict[Fraction, Fraction]] = {}
        for shift, coefficients in polynomials.items():
            for power, value in enumerate(coefficients):
                if value:
                    terms.setdefault(power, {})[as_fraction(shift)] = (
                        as_fraction(value)
                    )
        return cls(
            {
                power: PuiseuxSeries(coeffs)
                for power, coeffs in terms.items()
            }
        )

    @property
    def terms(self) -> dict[int, PuiseuxSeries]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[int, PuiseuxSeries]]:
        return iter(self._terms.items())

    def degree(self) -> int:
        return max(self._terms, default=0)

    def is_exact(self) -> bool:
        return all(coeff.order is None for coeff in self._terms.values())

    def shift_polynomials(self) -> dict[Fraction, list[Fraction]]:
        """Группирует оператор по сдвигам: {s: коэффициенты P_s(θ)}."""
        if not self.is_exact():
            raise DomainError(PicardFuchsCfg.INEXACT_OPERATOR_ERROR)
        degree = self.degree()
        grouped: dict[Fraction, list[Fraction]] = {}
        for power, coeff in self:
            for shift, value in coeff:
                row = grouped.setdefault(
                    shift, [Fraction(0)] * (degree + 1)
                )
                row[power] += value
        return dict(sorted(grouped.items()))

    def shifts(self) -> list[Fraction]:
        return sorted(
            {shift for _, coeff in self for shift in coeff.exponents()}
        )

    def max_positive_shift(self) -> Fraction:
        return max([Fraction(0)] + self.shifts())

    def _coerce(self, other: object) -> ThetaOperator:
        if isinstance(other, ThetaOperator):
            return other
        if isinstance(other, (int, Fraction, PuiseuxSeries)):
            return ThetaOperator({0: other})
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: object) -> ThetaOperator:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._terms)
        for power, coeff in other:
            result[power] = result[power] + coeff if power in result else coeff
        return ThetaOperator(result)

    __radd__ = __add__

    def __neg__(self) -> ThetaOperator:
        return self.scale(-1)

    def __sub__(self, other: object) -> ThetaOperator:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> ThetaOperator:
        return (-self) + other

    def scale(self, factor: Rational) -> ThetaOperator:
        return ThetaOperator(
            {power: coeff.scale(factor) for power, coeff in self}
        )

    def __mul__(self, other: object) -> ThetaOperator:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return compose(self, other)

    def __rmul__(self, other: object) -> ThetaOperator:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return compose(other, self)

    def __repr__(self) -> str:
        return "ThetaOperator({terms})".format(terms=self._terms)

    def __str__(self) -> str:
        parts = []
        for power, coeff in sorted(self._terms.items(), reverse=True):
            body = "θ" if power == 1 else "θ^{p}".format(p=power)
            parts.append(
                "({c})".format(c=coeff) + ("" if power == 0 else "·" + body)
            )
        return " + ".join(parts) if parts else "0"


def compose(left: ThetaOperator, right: ThetaOperator) -> ThetaOperator:
    """
    Композиция операторов в нормальном виде.

    θ^i·(b(q)·θ^j) = Σ_k C(i, k)·θ^k(b)·θ^{i-k+j}.
    """
    result: dict[int, PuiseuxSeries] = {}
    for i, a in left:
        for j, b in right:
            derivative = b
            for k in range(i + 1):
                if k:
                    derivative = derivative.theta()
                if derivative.is_zero():
                    break
                power = i - k + j
                term = (a * derivative).scale(binomial(i, k))
                result[power] = (
                    result[power] + term if power in result else term
                )
    return ThetaOperator(result)


def apply(
    operator: ThetaOperator,
    series: Union[PuiseuxSeries, PuiseuxLogSeries],
) -> PuiseuxLogSeries:
    """
    Применяет оператор к ряду.

    Порядок усечения результата не превосходит порядка ряда, уменьшенного
    на наибольший положительный сдвиг по q в операторе.
    """
    if isinstance(series, PuiseuxSeries):
        series = PuiseuxLogSeries([series])
    result = PuiseuxLogSeries([PuiseuxSeries.zero()])
    power_image = series
    current_power = 0
    for power, coeff in operator:
        while current_power < power:
            power_image = power_image.theta()
            current_power += 1
        result = result + power_image * coeff
    certified = min_order(
        result.order,
        None
        if series.order is None
        else series.order - operator.max_positive_shift(),
    )
    return result.truncate(certified)
