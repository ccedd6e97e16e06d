"""Модуль с общими полями сериализаторов DRF."""

from __future__ import annotations

from fractions import Fraction

from rest_framework import serializers

from config import configure_django
from core.constants import SerializersCfg
from core.exceptions import DomainError

configure_django()


def rational_pair(value: Fraction | int) -> list[int]:
    """Рациональное число парой [числитель, знаменатель]."""
    value = Fraction(value)
    return [value.numerator, value.denominator]


def pair_to_fraction(numerator: int, denominator: int) -> Fraction:
    if denominator == 0:
        raise serializers.ValidationError(
            SerializersCfg.RATIONAL_PAIR_ERROR.format(
                value=[numerator, denominator]
            )
        )
    return Fraction(numerator, denominator)


class StrictIntegerField(serializers.IntegerField):
    """
    Целое число без приведения типов.

    В отличие от IntegerField не принимает строки, дробные числа и
    булевы значения: коэффициенты K-классов и рядов должны быть точными.
    """

    default_error_messages = {
        "invalid": SerializersCfg.NOT_AN_INTEGER_ERROR,
    }

    def to_internal_value(self, data: object) -> int:
        if isinstance(data, bool) or not isinstance(data, int):
            self.fail("invalid", value=data)
        return super().to_internal_value(data)


class RationalField(serializers.ListField):
    """Рациональное число в виде пары [числитель, знаменатель]."""

    child = StrictIntegerField()

    def to_internal_value(self, data: object) -> Fraction:
        pair = super().to_internal_value(data)
        if len(pair) != SerializersCfg.PAIR_LENGTH:
            raise serializers.ValidationError(
                SerializersCfg.RATIONAL_PAIR_ERROR.format(value=data)
            )
        return pair_to_fraction(*pair)

    def to_representation(self, value: Fraction | int) -> list[int]:
        return rational_pair(value)


def integer_rows(length: int) -> serializers.ListField:
    """Список строк из length точных целых чисел."""
    return serializers.ListField(
        child=serializers.ListField(
            child=StrictIntegerField(), min_length=length, max_length=length
        )
    )


def error_text(detail: object) -> str:
    """Сообщения ValidationError одной строкой."""
    if isinstance(detail, dict):
        return "; ".join(
            f"{key}: {error_text(value)}" for key, value in detail.items()
        )
    if isinstance(detail, list):
        return ", ".join(error_text(item) for item in detail)
    return str(detail)


def deserialize(
    serializer_class: type[serializers.Serializer], data: object
) -> object:
    """
    Проверяет data сериализатором и создаёт объект модели.

    Параметры:
        serializer_class: Класс сериализатора с атрибутом format_error.
        data: Разобранный JSON.

    Возвращает:
        Объект, построенный методом create сериализатора.

    Ошибки проверки поднимаются как DomainError.
    """
    serializer = serializer_class(data=data)
    try:
        serializer.is_valid(raise_exception=True)
    except serializers.ValidationError as error:
        raise DomainError(
            serializer_class.format_error.format(
                error=error_text(error.detail)
            )
        ) from error
    return serializer.save()
