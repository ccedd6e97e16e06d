"""Модуль с операторами Пикара-Фукса для квинтики и её расширения."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from core.constants import PicardFuchsCfg
from core.exceptions import DomainError
from exact.scalars import Rational, as_fraction
from picard_fuchs.models import ThetaOperator, compose
from series.models import PuiseuxSeries


def theta_polynomial(
    factors: Sequence[tuple[Rational, Rational]],
) -> list[Fraction]:
    """
    Раскрывает произведение линейных множителей Π(a·θ + b).

    Возвращает:
        list: Коэффициенты по возрастанию степени θ.
    """
    result = [Fraction(1)]
    for a, b in factors:
        a, b = as_fraction(a), as_fraction(b)
        expanded = [Fraction(0)] * (len(result) + 1)
        for power, value in enumerate(result):
            expanded[power] += value * b
            expanded[power + 1] += value * a
        result = expanded
    return result


def quintic_factor() -> list[Fraction]:
    """P(θ) = (5θ+1)(5θ+2)(5θ+3)(5θ+4)."""
    return theta_polynomial([(5, j) for j in range(1, 5)])


def pf_L() -> ThetaOperator:
    """L = θ^4 - 5q·(5θ+1)(5θ+2)(5θ+3)(5θ+4)."""
    return ThetaOperator.from_shift_polynomials(
        {
            0: theta_polynomial([(1, 0)] * 4),
            1: [-5 * value for value in quintic_factor()],
        }
    )


def quintic_pf() -> ThetaOperator:
    return pf_L()


def extended_pf() -> ThetaOperator:
    """
    Расширенный оператор (2θ-1)∘L.

    После нормального упорядочивания его q-часть равна
    -5q(2θ+1)(5θ+1)(5θ+2)(5θ+3)(5θ+4); он аннулирует I_0..I_3 и T.
    """
    return compose(
        ThetaOperator.from_shift_polynomials({0: [-1, 2]}), pf_L()
    )


def lg_pf() -> ThetaOperator:
    """θ^4 - 5^5·t^{-5}(θ-1)(θ-2)(θ-3)(θ-4) в переменной t, q = t^{-5}."""
    return ThetaOperator.from_shift_polynomials(
        {
            0: theta_polynomial([(1, 0)] * 4),
            -5: [
                -(5**5) * value
                for value in theta_polynomial([(1, -j) for j in range(1, 5)])
            ],
        }
    )


def change_of_variable(operator: ThetaOperator, n: int) -> ThetaOperator:
    """
    Переписывает оператор в переменной t при q = t^{-n}.

    θ_q = -θ_t/n, а коэффициент q^e переходит в t^{-n·e}. Результат
    нормируется так, чтобы свободный член коэффициента при старшей
    степени θ был равен 1 (если он нулевой, берётся младший член).
    """
    if n == 0:
        raise DomainError(PicardFuchsCfg.CHANGE_OF_VARIABLE_ERROR)
    terms = {}
    for power, coeff in operator:
        factor = Fraction(-1, n) ** power
        terms[power] = PuiseuxSeries(
            {-n * exponent: value * factor for exponent, value in coeff},
            None,
            coeff.ramification,
        )
    rewritten = ThetaOperator(terms)
    top = rewritten.terms[rewritten.degree()]
    normalizer = top[0] if top[0] else top.leading_term()[1]
    return rewritten.scale(1 / normalizer)


def indicial_shift(operator: ThetaOperator) -> Fraction:
    return min(operator.shift_polynomials())


def indicial_polynomial(operator: ThetaOperator) -> list[Fraction]:
    """Многочлен при наименьшем сдвиге по q (коэффициенты по θ)."""
    polynomials = operator.shift_polynomials()
    return polynomials[min(polynomials)]
