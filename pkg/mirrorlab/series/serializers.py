"""Модуль для работы с сериализаторами рядов."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from rest_framework import serializers

from core.constants import SerializersCfg
from core.serializers import (
    RationalField,
    StrictIntegerField,
    integer_rows,
    pair_to_fraction,
    rational_pair,
)
from series.models import PuiseuxLogSeries, PuiseuxSeries


class PuiseuxSeriesSerializer(serializers.Serializer):
    """
    Сериализатор для рядов PuiseuxSeries и PuiseuxLogSeries.

    Поля:
    - ramification: Знаменатель решётки показателей.
    - order: Порядок усечения как пара [числитель, знаменатель] или null.
    - terms: Список [exp_num, exp_den, coeff_num, coeff_den, log_power],
    где log_power = j относится к множителю (log x)^j/j!.
    """

    format_error = SerializersCfg.SERIES_FORMAT_ERROR

    ramification = StrictIntegerField(min_value=1)
    order = RationalField(allow_null=True)
    terms = integer_rows(SerializersCfg.TERM_LENGTH)

    def validate_terms(
        self, value: list[list[int]]
    ) -> list[tuple[Fraction, Fraction, int]]:
        terms = []
        for exp_num, exp_den, coeff_num, coeff_den, log_power in value:
            if log_power < 0:
                raise serializers.ValidationError(
                    SerializersCfg.NEGATIVE_POWER_ERROR.format(
                        power=log_power
                    )
                )
            terms.append(
                (
                    pair_to_fraction(exp_num, exp_den),
                    pair_to_fraction(coeff_num, coeff_den),
                    log_power,
                )
            )
        return terms

    def create(self, validated_data: dict) -> PuiseuxLogSeries:
        parts: dict[int, dict[Fraction, Fraction]] = {}
        for exponent, coeff, log_power in validated_data[
            SerializersCfg.TERMS
        ]:
            parts.setdefault(log_power, {})[exponent] = coeff
        rank = max(parts, default=0) + 1
        return PuiseuxLogSeries(
            [
                PuiseuxSeries(
                    parts.get(j, {}),
                    validated_data[SerializersCfg.ORDER],
                    validated_data[SerializersCfg.RAMIFICATION],
                )
                for j in range(rank)
            ]
        )

    def to_representation(
        self, instance: Union[PuiseuxSeries, PuiseuxLogSeries]
    ) -> dict:
        if isinstance(instance, PuiseuxSeries):
            instance = PuiseuxLogSeries([instance])
        return {
            SerializersCfg.RAMIFICATION: instance.ramification,
            SerializersCfg.ORDER: (
                None
                if instance.order is None
                else rational_pair(instance.order)
            ),
            SerializersCfg.TERMS: [
                rational_pair(exponent) + rational_pair(coeff) + [log_power]
                for exponent, coeff, log_power in instance.terms()
            ],
        }
