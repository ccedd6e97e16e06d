"""Модуль для работы с сериализаторами таблиц инвариантов."""

from __future__ import annotations

from fractions import Fraction

from rest_framework import serializers

from core.constants import SerializersCfg
from core.serializers import (
    RationalField,
    StrictIntegerField,
    pair_to_fraction,
    rational_pair,
)
from enumerative.models import InvariantTable


class InvariantEntriesField(serializers.ListField):
    """Строки [d_num, d_den, v_num, v_den] по возрастанию степени."""

    child = serializers.ListField(
        child=StrictIntegerField(),
        min_length=SerializersCfg.ENTRY_LENGTH,
        max_length=SerializersCfg.ENTRY_LENGTH,
    )

    def to_internal_value(self, data: object) -> dict[Fraction, Fraction]:
        return {
            pair_to_fraction(d_num, d_den): pair_to_fraction(v_num, v_den)
            for d_num, d_den, v_num, v_den in super().to_internal_value(data)
        }

    def to_representation(
        self, value: dict[Fraction, Fraction]
    ) -> list[list[int]]:
        return [
            rational_pair(degree) + rational_pair(invariant)
            for degree, invariant in sorted(value.items())
        ]


class InvariantTableSerializer(serializers.Serializer):
    """
    Сериализатор для модели InvariantTable.

    Поля:
    - kind: Вид таблицы.
    - entries: Список [d_num, d_den, v_num, v_den] по возрастанию степени.
    - truncation: Наибольшая достоверная степень парой.
    - conjectural: Признак гипотетической таблицы.
    """

    format_error = SerializersCfg.TABLE_FORMAT_ERROR

    kind = serializers.CharField()
    entries = InvariantEntriesField()
    truncation = RationalField()
    conjectural = serializers.BooleanField(default=False)

    def create(self, validated_data: dict) -> InvariantTable:
        return InvariantTable(**validated_data)
