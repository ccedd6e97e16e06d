"""Модуль для работы с сериализаторами дифференциальных операторов."""

from __future__ import annotations

from fractions import Fraction

from rest_framework import serializers

from core.constants import SerializersCfg
from core.serializers import RationalField, StrictIntegerField, rational_pair
from picard_fuchs.models import ThetaOperator
from series.models import PuiseuxSeries


class ThetaTermField(serializers.Field):
    """Член [[e_num, e_den], [c_num, c_den], степень θ]."""

    default_error_messages = {
        "invalid": SerializersCfg.OPERATOR_TERM_ERROR,
    }

    def to_internal_value(
        self, data: object
    ) -> tuple[Fraction, Fraction, int]:
        if not isinstance(data, list) or len(data) != (
            SerializersCfg.OPERATOR_TERM_LENGTH
        ):
            self.fail("invalid", value=data)
        exponent, coeff, power = data
        return (
            RationalField().run_validation(exponent),
            RationalField().run_validation(coeff),
            StrictIntegerField(min_value=0).run_validation(power),
        )

    def to_representation(self, value: tuple) -> list:
        exponent, coeff, power = value
        return [rational_pair(exponent), rational_pair(coeff), power]


class ThetaOperatorSerializer(serializers.Serializer):
    """
    Сериализатор для модели ThetaOperator.

    Поля:
    - terms: Список тройок [показатель q, коэффициент, степень θ], где
    показатель и коэффициент записаны парами [числитель, знаменатель].
    """

    format_error = SerializersCfg.OPERATOR_FORMAT_ERROR

    terms = serializers.ListField(child=ThetaTermField())

    def create(self, validated_data: dict) -> ThetaOperator:
        grouped: dict[int, dict[Fraction, Fraction]] = {}
        for exponent, coeff, power in validated_data[SerializersCfg.TERMS]:
            grouped.setdefault(power, {})[exponent] = coeff
        return ThetaOperator(
            {power: PuiseuxSeries(coeffs) for power, coeffs in grouped.items()}
        )

    def to_representation(self, instance: ThetaOperator) -> dict:
        term_field = ThetaTermField()
        return {
            SerializersCfg.TERMS: [
                term_field.to_representation((exponent, coeff, power))
                for power, series in instance
                for exponent, coeff in series
            ]
        }
