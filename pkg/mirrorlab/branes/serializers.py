"""Модуль для работы с сериализаторами бран."""

from __future__ import annotations

import json
from fractions import Fraction

from rest_framework import serializers

from branes.models import Brane, LaurentChar, named_brane
from core.constants import BranesCfg, SerializersCfg
from core.exceptions import DomainError
from core.serializers import RationalField, StrictIntegerField, deserialize


class LaurentCharField(serializers.DictField):
    """K-класс в виде словаря {показатель: коэффициент}."""

    child = StrictIntegerField()

    def to_internal_value(self, data: object) -> LaurentChar:
        coeffs = {}
        for key, coeff in super().to_internal_value(data).items():
            try:
                exponent = int(key)
            except ValueError as error:
                raise serializers.ValidationError(
                    SerializersCfg.EXPONENT_KEY_ERROR.format(key=key)
                ) from error
            coeffs[exponent] = coeff
        return LaurentChar(coeffs)

    def to_representation(self, value: LaurentChar) -> dict[str, int]:
        return {str(exponent): coeff for exponent, coeff in value}


class BraneSerializer(serializers.Serializer):
    """
    Сериализатор для модели Brane.

    Поля:
    - label: Название браны.
    - offset: Сдвиг окна B парой [числитель, знаменатель].
    - char: K-класс в виде {показатель: коэффициент}.
    """

    format_error = SerializersCfg.BRANE_FORMAT_ERROR

    label = serializers.CharField(default=BranesCfg.INLINE_LABEL)
    offset = RationalField(default=Fraction(0))
    char = LaurentCharField()

    def create(self, validated_data: dict) -> Brane:
        return Brane(**validated_data)


def brane_from_argument(value: str, offset: Fraction | None = None) -> Brane:
    """
    Брана из аргумента командной строки.

    Принимает имя готовой браны или JSON-словарь {показатель: коэффициент}.
    Явно переданный offset заменяет сдвиг окна браны.
    """
    text = value.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            raise DomainError(
                BranesCfg.CHAR_FORMAT_ERROR.format(value=value)
            ) from error
        brane = deserialize(BraneSerializer, {SerializersCfg.CHAR: data})
    else:
        brane = named_brane(text)
    if offset is not None:
        brane = Brane(brane.char, offset, brane.label)
    return brane
