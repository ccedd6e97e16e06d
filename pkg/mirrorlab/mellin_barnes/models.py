"""Модуль с моделями подынтегральных выражений Меллина-Барнса."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

import mpmath

from branes.algebra import char_insertion
from branes.models import LaurentChar
from config import settings
from core.constants import MellinBarnesCfg
from core.exceptions import DomainError
from glsm.models import GlsmCharges
from mellin_barnes.gamma import gamma_numeric


@dataclass(frozen=True)
class Precision:
    """
    Параметры точности.

    Поля:
    - bits: Рабочая точность в битах, не меньше 53.
    - target_rel_error: Целевая относительная погрешность; по умолчанию
    2^{-bits+8}.
    """

    bits: int = settings.BITS
    target_rel_error: Optional[float] = None

    def __post_init__(self) -> None:
        if self.bits < MellinBarnesCfg.MIN_BITS:
            raise DomainError(
                MellinBarnesCfg.PRECISION_ERROR.format(
                    bits=self.bits, minimum=MellinBarnesCfg.MIN_BITS
                )
            )

    @property
    def tolerance(self) -> mpmath.mpf:
        if self.target_rel_error is not None:
            return mpmath.mpf(self.target_rel_error)
        return mpmath.ldexp(1, -(self.bits - MellinBarnesCfg.GUARD_BITS))

    @property
    def working_bits(self) -> int:
        return self.bits + MellinBarnesCfg.GUARD_BITS

    def rounded(self, value: object) -> object:
        """Значение, округлённое до bits, независимо от точности mpmath."""
        with mpmath.workprec(self.bits):
            return +value


@dataclass(frozen=True)
class MBIntegrand:
    """
    Подынтегральное выражение ∏Γ(a·σ + b)·Ch(σ)·q^{-σ}.

    Поля:
    - gamma_factors: Пары (a, b) множителей Γ(a·σ + b).
    - insertion: K-класс, вставляемый как Σ c_n·e^{2πi·n·σ}.
    - q_value: Значение q.
    - delta: Вещественная часть контура σ = δ + i·s.
    - arg: Аргумент q, задающий ветвь log q = log|q| + i·arg; по
    умолчанию главный.
    - label: Название модели для сообщений.
    """

    gamma_factors: tuple[tuple[Fraction, Fraction], ...]
    insertion: LaurentChar
    q_value: object
    delta: Fraction = settings.CONTOUR_DELTA
    arg: Optional[object] = None
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.q_value == 0:
            raise DomainError(MellinBarnesCfg.ZERO_Q_ERROR)
        for a, b in self.gamma_factors:
            if a * self.delta + b <= 0:
                raise DomainError(
                    MellinBarnesCfg.CONTOUR_ERROR.format(
                        delta=self.delta, a=a, b=b
                    )
                )

    @classmethod
    def from_charges(
        cls,
        charges: GlsmCharges,
        insertion: LaurentChar,
        q_value: object,
        delta: Fraction = settings.CONTOUR_DELTA,
        arg: Optional[float] = None,
    ) -> MBIntegrand:
        """Множители Γ(D_i·σ + q_i/2) по таблице зарядов."""
        factors = tuple(
            (Fraction(coord.weight), coord.r_charge / 2)
            for coord in charges.coords
        )
        return cls(factors, insertion, q_value, delta, arg, charges.name)

    def with_insertion(self, insertion: LaurentChar) -> MBIntegrand:
        return MBIntegrand(
            self.gamma_factors,
            insertion,
            self.q_value,
            self.delta,
            self.arg,
            self.label,
        )

    def with_arg(self, arg: object) -> MBIntegrand:
        """Тот же |q| с ветвью arg; q считается при текущей точности."""
        modulus = abs(mpmath.mpmathify(self.q_value))
        return MBIntegrand(
            self.gamma_factors,
            self.insertion,
            modulus * mpmath.expj(arg),
            self.delta,
            arg,
            self.label,
        )

    def log_q(self) -> mpmath.mpc:
        q = mpmath.mpmathify(self.q_value)
        theta = mpmath.arg(q) if self.arg is None else mpmath.mpf(self.arg)
        return mpmath.mpc(mpmath.log(abs(q)), theta)

    def gamma_product(self, sigma: object, skip: int | None = None) -> object:
        """∏Γ(a·σ + b), при skip без множителя с этим номером."""
        product = mpmath.mpf(1)
        for index, (a, b) in enumerate(self.gamma_factors):
            if index != skip:
                product *= gamma_numeric(
                    mpmath.mpf(a) * sigma + mpmath.mpf(b)
                )
        return product

    @cached_property
    def _insertion(self):
        return char_insertion(self.insertion)

    def kernel(self, sigma: object) -> object:
        """Ch(σ)·q^{-σ}."""
        return self._insertion(sigma) * mpmath.exp(
            -sigma * self.log_q()
        )

    def __call__(self, sigma: object) -> object:
        sigma = mpmath.mpmathify(sigma)
        return self.gamma_product(sigma) * self.kernel(sigma)


@dataclass(frozen=True)
class MBResult:
    """
    Результат численного вычисления.

    Поля:
    - value: Значение.
    - est_error: Оценка абсолютной погрешности.
    - method: "contour" или "residues".
    - n_terms: Число групп полюсов (для вычетов) или участков квадратуры.
    """

    value: mpmath.mpc
    est_error: mpmath.mpf
    method: str
    n_terms: int = 0

    def scaled(self, factor: object, prec: Precision) -> MBResult:
        with mpmath.workprec(prec.working_bits):
            value = self.value * factor
            error = self.est_error * abs(factor)
        return MBResult(
            prec.rounded(value),
            prec.rounded(error),
            self.method,
            self.n_terms,
        )
