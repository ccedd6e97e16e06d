"""Модуль с моделями усечённых рядов Пюизё над рациональными числами."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from config import settings
from core.constants import SeriesCfg
from core.exceptions import DomainError
from exact.scalars import Rational, as_fraction, binomial

Order = Optional[Fraction]


def min_order(*orders: Order) -> Order:
    """Минимум порядков усечения; None означает точный (бесконечный)."""
    finite = [order for order in orders if order is not None]
    return min(finite) if finite else None


def add_order(order: Order, shift: Rational) -> Order:
    return None if order is None else order + shift


class PuiseuxSeries:
    """
    Усечённый ряд Σ c_e·x^e с показателями e из решётки (1/r)·Z.

    Поля:
    - ramification: Натуральное r, знаменатель решётки показателей.
    - order: Граница усечения (все хранимые показатели строго меньше);
    None означает точный многочлен Пюизё.
    - coefficients: Отображение показатель -> коэффициент (без нулей).
    """

    __slots__ = ("ramification", "order", "_coefficients")

    def __init__(
        self,
        coefficients: Mapping[Rational, Rational] | None = None,
        order: Rational | None = None,
        ramification: int | None = None,
    ) -> None:
        self.ramification = ramification or settings.RAMIFICATION
        self.order = None if order is None else as_fraction(order)
        cleaned: dict[Fraction, Fraction] = {}
        for exponent, coeff in (coefficients or {}).items():
            exponent = as_fraction(exponent)
            coeff = as_fraction(coeff)
            if (exponent * self.ramification).denominator != 1:
                raise DomainError(
                    SeriesCfg.LATTICE_ERROR.format(
                        exponent=exponent, ramification=self.ramification
                    )
                )
            if coeff and (self.order is None or exponent < self.order):
                cleaned[exponent] = coeff
        if (
            self.order is not None
            and (self.order * self.ramification).denominator != 1
        ):
            raise DomainError(
                SeriesCfg.LATTICE_ERROR.format(
                    exponent=self.order, ramification=self.ramification
                )
            )
        self._coefficients = dict(sorted(cleaned.items()))

    @classmethod
    def monomial(
        cls,
        exponent: Rational,
        coeff: Rational = 1,
        order: Rational | None = None,
        ramification: int | None = None,
    ) -> PuiseuxSeries:
        return cls({exponent: coeff}, order, ramification)

    @classmethod
    def constant(
        cls, value: Rational, order: Rational | None = None
    ) -> PuiseuxSeries:
        return cls({0: value}, order)

    @classmethod
    def zero(cls, order: Rational | None = None) -> PuiseuxSeries:
        return cls({}, order)

    @property
    def coefficients(self) -> dict[Fraction, Fraction]:
        return dict(self._coefficients)

    def __getitem__(self, exponent: Rational) -> Fraction:
        return self._coefficients.get(as_fraction(exponent), Fraction(0))

    def __iter__(self) -> Iterator[tuple[Fraction, Fraction]]:
        return iter(self._coefficients.items())

    def __len__(self) -> int:
        return len(self._coefficients)

    def exponents(self) -> list[Fraction]:
        return list(self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    def valuation(self) -> Order:
        """Наименьший показатель; для нулевого ряда равен порядку."""
        if self._coefficients:
            return next(iter(self._coefficients))
        return self.order

    def leading_term(self) -> tuple[Fraction, Fraction]:
        if self.is_zero():
            raise DomainError(SeriesCfg.ZERO_LEADING_TERM_ERROR)
        return next(iter(self._coefficients.items()))

    def lattice_step(self) -> Fraction:
        """Шаг наименьшей решётки, содержащей показатели и порядок."""
        denominators = [e.denominator for e in self._coefficients]
        if self.order is not None:
            denominators.append(self.order.denominator)
        return Fraction(1, lcm(1, *denominators))

    def truncate(self, order: Rational | None) -> PuiseuxSeries:
        return PuiseuxSeries(
            self._coefficients,
            min_order(
                self.order, None if order is None else as_fraction(order)
            ),
            self.ramification,
        )

    def with_order(self, order: Order) -> PuiseuxSeries:
        return PuiseuxSeries(self._coefficients, order, self.ramification)

    def _coerce(self, other: object) -> PuiseuxSeries:
        if isinstance(other, PuiseuxSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PuiseuxSeries({0: other}, None, self.ramification)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self._coefficients == other._coefficients
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((tuple(self._coefficients.items()), self.order))

    def agrees_with(self, other: PuiseuxSeries) -> bool:
        """Совпадение коэффициентов до общего порядка усечения."""
        common = min_order(self.order, other.order)
        return (self - other).truncate(common).is_zero()

    def __add__(self, other: object) -> PuiseuxSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._coefficients)
        for exponent, coeff in other:
            result[exponent] = result.get(exponent, 0) + coeff
        return PuiseuxSeries(
            result,
            min_order(self.order, other.order),
            lcm(self.ramification, other.ramification),
        )

    __radd__ = __add__

    def __neg__(self) -> PuiseuxSeries:
        return self.scale(-1)

    def __sub__(self, other: object) -> PuiseuxSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> PuiseuxSeries:
        return (-self) + other

    def scale(self, factor: Rational) -> PuiseuxSeries:
        factor = as_fraction(factor)
        return PuiseuxSeries(
            {e: c * factor for e, c in self}, self.order, self.ramification
        )

    def shift(self, exponent: Rational) -> PuiseuxSeries:
        """Умножает ряд на x^exponent (порядок сдвигается вместе с ним)."""
        exponent = as_fraction(exponent)
        ramification = lcm(self.ramification, exponent.denominator)
        return PuiseuxSeries(
            {e + exponent: c for e, c in self},
            add_order(self.order, exponent),
            ramification,
        )

    def __mul__(self, other: object) -> PuiseuxSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = min_order(
            _product_bound(self.order, other.valuation()),
            _product_bound(other.order, self.valuation()),
        )
        result: dict[Fraction, Fraction] = {}
        for e1, c1 in self:
            for e2, c2 in other:
                exponent = e1 + e2
                if order is not None and exponent >= order:
                    continue
                result[exponent] = result.get(exponent, 0) + c1 * c2
        return PuiseuxSeries(
            result, order, lcm(self.ramification, other.ramification)
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> PuiseuxSeries:
        if exponent < 0:
            raise DomainError(
                SeriesCfg.NEGATIVE_POWER_ERROR.format(power=exponent)
            )
        result = PuiseuxSeries({0: 1}, None, self.ramification)
        for _ in range(exponent):
            result = result * self
        return result

    def theta(self) -> PuiseuxSeries:
        """Применяет θ = x d/dx: x^e ↦ e·x^e."""
        return PuiseuxSeries(
            {e: e * c for e, c in self}, self.order, self.ramification
        )

    def substitute_power(self, k: Rational) -> PuiseuxSeries:
        """
        Подставляет x ↦ x^k для положительного рационального k.

        Используется, например, для записи ряда по q^{1/2} через t.
        """
        k = as_fraction(k)
        if k <= 0:
            raise DomainError(SeriesCfg.SUBSTITUTE_POWER_ERROR.format(k=k))
        ramification = self.ramification * k.denominator
        return PuiseuxSeries(
            {e * k: c for e, c in self},
            None if self.order is None else self.order * k,
            ramification,
        )

    def reflect_exponents(self, k: Rational) -> PuiseuxSeries:
        """
        Точный многочлен после подстановки x ↦ y^k с отрицательным k.

        Разложение по убывающим степеням не имеет порядка усечения в
        смысле этого класса, поэтому результат помечается как точный.
        """
        k = as_fraction(k)
        if k >= 0:
            raise DomainError(SeriesCfg.SUBSTITUTE_POWER_ERROR.format(k=k))
        ramification = self.ramification * k.denominator
        return PuiseuxSeries(
            {e * k: c for e, c in self}, None, ramification
        )

    def rescale_variable(self, factor: Rational) -> PuiseuxSeries:
        """Подставляет x ↦ factor·x (только целые показатели)."""
        factor = as_fraction(factor)
        result = {}
        for e, c in self:
            if e.denominator != 1:
                raise DomainError(
                    SeriesCfg.FRACTIONAL_RESCALE_ERROR.format(exponent=e)
                )
            result[e] = c * factor ** int(e)
        return PuiseuxSeries(result, self.order, self.ramification)

    def __repr__(self) -> str:
        return "PuiseuxSeries({terms}, order={order}, r={r})".format(
            terms=self._coefficients, order=self.order, r=self.ramification
        )

    def __str__(self) -> str:
        return format_terms(
            [(e, c, 0) for e, c in self], self.order, SeriesCfg.VARIABLE
        )


def _product_bound(order: Order, valuation: Order) -> Order:
    if order is None or valuation is None:
        return None
    return order + valuation


def format_terms(
    terms: Iterable[tuple[Fraction, Fraction, int]],
    order: Order,
    variable: str,
) -> str:
    parts = []
    for exponent, coeff, log_power in terms:
        monomial = []
        if exponent:
            monomial.append(
                variable
                if exponent == 1
                else "{v}^({e})".format(v=variable, e=exponent)
            )
        if log_power:
            monomial.append(
                "log^{j}/{j}!".format(j=log_power)
                if log_power > 1
                else "log"
            )
        body = "·".join(monomial)
        if not body:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append(body)
        else:
            parts.append("{c}·{b}".format(c=coeff, b=body))
    text = " + ".join(parts) if parts else "0"
    if order is not None:
        text += " + O({v}^({o}))".format(v=variable, o=order)
    return text


class PuiseuxLogSeries:
    """
    Ряд Σ_j (log x)^j/j!·P_j(x) с рядами Пюизё P_j, j ≤ 3.

    Поля:
    - log_parts: Кортеж из не более чем четырёх рядов; индекс j
    соответствует множителю (log x)^j/j!.

    Все части приводятся к общему ветвлению и общему порядку усечения.
    """

    __slots__ = ("log_parts",)

    def __init__(self, log_parts: Sequence[PuiseuxSeries | Rational]) -> None:
        parts = [
            part
            if isinstance(part, PuiseuxSeries)
            else PuiseuxSeries.constant(part)
            for part in log_parts
        ]
        while len(parts) > 1 and parts[-1].is_zero():
            parts.pop()
        if not parts:
            parts = [PuiseuxSeries.zero()]
        if len(parts) > SeriesCfg.MAX_LOG_PARTS:
            raise DomainError(
                SeriesCfg.LOG_RANK_ERROR.format(rank=len(parts) - 1)
            )
        order = min_order(*(part.order for part in parts))
        ramification = lcm(*(part.ramification for part in parts))
        self.log_parts = tuple(
            PuiseuxSeries(part.coefficients, order, ramification)
            for part in parts
        )

    @classmethod
    def from_series(cls, series: PuiseuxSeries) -> PuiseuxLogSeries:
        return cls([series])

    @classmethod
    def log(cls, order: Rational | None = None) -> PuiseuxLogSeries:
        """Ряд log x."""
        return cls(
            [PuiseuxSeries.zero(order), PuiseuxSeries.constant(1, order)]
        )

    @property
    def order(self) -> Order:
        return self.log_parts[0].order

    @property
    def ramification(self) -> int:
        return self.log_parts[0].ramification

    @property
    def log_rank(self) -> int:
        return len(self.log_parts) - 1

    def part(self, j: int) -> PuiseuxSeries:
        if j < len(self.log_parts):
            return self.log_parts[j]
        return PuiseuxSeries.zero(self.order)

    def is_log_free(self) -> bool:
        return all(part.is_zero() for part in self.log_parts[1:])

    def is_zero(self) -> bool:
        return all(part.is_zero() for part in self.log_parts)

    def truncate(self, order: Rational | None) -> PuiseuxLogSeries:
        return PuiseuxLogSeries(
            [part.truncate(order) for part in self.log_parts]
        )

    def _coerce(self, other: object) -> PuiseuxLogSeries:
        if isinstance(other, PuiseuxLogSeries):
            return other
        if isinstance(other, PuiseuxSeries):
            return PuiseuxLogSeries([other])
        if isinstance(other, (int, Fraction)):
            return PuiseuxLogSeries([PuiseuxSeries.constant(other)])
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.log_parts == other.log_parts

    def __hash__(self) -> int:
        return hash(self.log_parts)

    def agrees_with(self, other: PuiseuxLogSeries) -> bool:
        rank = max(len(self.log_parts), len(other.log_parts))
        return all(
            self.part(j).agrees_with(other.part(j)) for j in range(rank)
        )

    def __add__(self, other: object) -> PuiseuxLogSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        rank = max(len(self.log_parts), len(other.log_parts))
        return PuiseuxLogSeries(
            [self.part(j) + other.part(j) for j in range(rank)]
        )

    __radd__ = __add__

    def __neg__(self) -> PuiseuxLogSeries:
        return PuiseuxLogSeries([-part for part in self.log_parts])

    def __sub__(self, other: object) -> PuiseuxLogSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> PuiseuxLogSeries:
        return (-self) + other

    def scale(self, factor: Rational) -> PuiseuxLogSeries:
        return PuiseuxLogSeries(
            [part.scale(factor) for part in self.log_parts]
        )

    def __mul__(self, other: object) -> PuiseuxLogSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        rank = len(self.log_parts) + len(other.log_parts) - 1
        parts = [PuiseuxSeries.zero() for _ in range(rank)]
        order = min_order(self.order, other.order)
        for i, left in enumerate(self.log_parts):
            for j, right in enumerate(other.log_parts):
                if left.is_zero() and right.is_zero():
                    continue
                parts[i + j] = parts[i + j] + (left * right).scale(
                    binomial(i + j, i)
                )
        limit = _mul_order(self, other, order)
        parts = [part.truncate(limit) for part in parts]
        while len(parts) > 1 and parts[-1].is_zero():
            parts.pop()
        if len(parts) > SeriesCfg.MAX_LOG_PARTS:
            raise DomainError(
                SeriesCfg.LOG_RANK_ERROR.format(rank=len(parts) - 1)
            )
        return PuiseuxLogSeries(parts)

    __rmul__ = __mul__

    def theta(self) -> PuiseuxLogSeries:
        """θ(P_j·log^j/j!) = θP_j·log^j/j! + P_j·log^{j-1}/(j-1)!."""
        parts = [
            self.log_parts[j].theta() + self.part(j + 1)
            for j in range(len(self.log_parts))
        ]
        return PuiseuxLogSeries(parts)

    def shift(self, exponent: Rational) -> PuiseuxLogSeries:
        return PuiseuxLogSeries(
            [part.shift(exponent) for part in self.log_parts]
        )

    def terms(self) -> list[tuple[Fraction, Fraction, int]]:
        """Плоский список (показатель, коэффициент, степень логарифма)."""
        return [
            (exponent, coeff, j)
            for j, part in enumerate(self.log_parts)
            for exponent, coeff in part
        ]

    def __repr__(self) -> str:
        return "PuiseuxLogSeries({parts})".format(parts=list(self.log_parts))

    def __str__(self) -> str:
        return format_terms(self.terms(), self.order, SeriesCfg.VARIABLE)


def _mul_order(
    left: PuiseuxLogSeries, right: PuiseuxLogSeries, fallback: Order
) -> Order:
    left_val = min_order(*(part.valuation() for part in left.log_parts))
    right_val = min_order(*(part.valuation() for part in right.log_parts))
    bound = min_order(
        _product_bound(left.order, right_val),
        _product_bound(right.order, left_val),
    )
    return bound if bound is not None else fallback
