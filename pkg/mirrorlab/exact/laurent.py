"""Модуль для целочисленных многочленов Лорана от одной переменной."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from core.constants import ExactCfg
from core.exceptions import DomainError


class LaurentPolynomial:
    """
    Целочисленный многочлен Лорана Σ c_n·x^n с конечным носителем.

    Нулевые коэффициенты не хранятся. Значения неизменяемы: все операции
    возвращают новые объекты.
    """

    variable = ExactCfg.DEFAULT_VARIABLE

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Mapping[int, int] | None = None) -> None:
        cleaned = {}
        for exponent, coeff in (coefficients or {}).items():
            if int(coeff) != coeff or int(exponent) != exponent:
                raise DomainError(
                    ExactCfg.LAURENT_INTEGRALITY_ERROR.format(
                        exponent=exponent, coeff=coeff
                    )
                )
            if coeff:
                cleaned[int(exponent)] = int(coeff)
        self._coefficients = dict(sorted(cleaned.items()))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPolynomial:
        return cls({exponent: coeff})

    @classmethod
    def from_terms(
        cls, terms: Iterable[tuple[int, int]]
    ) -> LaurentPolynomial:
        collected: dict[int, int] = {}
        for exponent, coeff in terms:
            collected[exponent] = collected.get(exponent, 0) + coeff
        return cls(collected)

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._coefficients)

    def support(self) -> list[int]:
        return list(self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    def max_exponent(self) -> int:
        if self.is_zero():
            raise DomainError(ExactCfg.LAURENT_ZERO_DEGREE_ERROR)
        return max(self._coefficients)

    def min_exponent(self) -> int:
        if self.is_zero():
            raise DomainError(ExactCfg.LAURENT_ZERO_DEGREE_ERROR)
        return min(self._coefficients)

    def __getitem__(self, exponent: int) -> int:
        return self._coefficients.get(exponent, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._coefficients.items())

    def _new(self, coefficients: Mapping[int, int]) -> LaurentPolynomial:
        return type(self)(coefficients)

    def _coerce(self, other: object) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return self._new({0: other})
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(tuple(self._coefficients.items()))

    def __add__(self, other: object) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._coefficients)
        for exponent, coeff in other:
            result[exponent] = result.get(exponent, 0) + coeff
        return self._new(result)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return self._new({n: -c for n, c in self})

    def __sub__(self, other: object) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other: object) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result: dict[int, int] = {}
        for n, a in self:
            for m, b in other:
                result[n + m] = result.get(n + m, 0) + a * b
        return self._new(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPolynomial:
        if exponent < 0:
            if len(self._coefficients) == 1:
                (n, c), = self._coefficients.items()
                if c in (1, -1):
                    return self._new({n * exponent: c**-exponent})
            raise DomainError(
                ExactCfg.LAURENT_NEGATIVE_POWER_ERROR.format(value=self)
            )
        result = self._new({0: 1})
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Умножает на x^k."""
        return self._new({n + k: c for n, c in self})

    def substitute_power(self, k: int) -> LaurentPolynomial:
        """Подставляет x ↦ x^k."""
        return self._new({n * k: c for n, c in self})

    def evaluate(self, x: object) -> object:
        """Значение в точке x (любой тип с умножением и степенью)."""
        total = 0
        for n, c in self:
            total = total + c * x**n
        return total

    def divide(
        self, divisor: LaurentPolynomial
    ) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        """
        Делит многочлен на divisor, начиная со старшей степени.

        Частное строится вниз до показателя min(self) - min(divisor);
        деление точное тогда и только тогда, когда остаток нулевой.

        Возвращает:
            tuple: Пара (частное, остаток).
        """
        if divisor.is_zero():
            raise DomainError(ExactCfg.LAURENT_ZERO_DIVISION_ERROR)
        if self.is_zero():
            return self._new({}), self._new({})
        lead_exp = divisor.max_exponent()
        lead = divisor[lead_exp]
        lowest = self.min_exponent() - divisor.min_exponent()
        quotient: dict[int, int] = {}
        remainder = self
        while not remainder.is_zero():
            top = remainder.max_exponent()
            shift = top - lead_exp
            if shift < lowest or remainder[top] % lead:
                break
            coeff = remainder[top] // lead
            quotient[shift] = coeff
            remainder = remainder - divisor.shift(shift) * coeff
        return self._new(quotient), remainder

    def __repr__(self) -> str:
        return "{name}({coefficients})".format(
            name=type(self).__name__, coefficients=self._coefficients
        )

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for n, c in sorted(self._coefficients.items(), reverse=True):
            if n == 0:
                body = str(abs(c))
            else:
                power = self.variable if n == 1 else "{v}^{n}".format(
                    v=self.variable, n=n
                )
                body = power if abs(c) == 1 else "{c}{p}".format(
                    c=abs(c), p=power
                )
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " {sign} {body}".format(sign=sign, body=body)
        return text


@lru_cache(maxsize=None)
def cyclotomic(order: int) -> LaurentPolynomial:
    """Возвращает круговой многочлен Φ_order(x)."""
    if order < 1:
        raise DomainError(
            ExactCfg.CYCLOTOMIC_ORDER_ERROR.format(order=order)
        )
    result = LaurentPolynomial({order: 1, 0: -1})
    for divisor in range(1, order):
        if order % divisor == 0:
            result, remainder = result.divide(cyclotomic(divisor))
            if not remainder.is_zero():
                raise DomainError(
                    ExactCfg.CYCLOTOMIC_ORDER_ERROR.format(order=order)
                )
    return result
