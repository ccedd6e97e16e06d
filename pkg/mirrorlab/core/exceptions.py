"""Модуль с исключениями проекта."""

from fractions import Fraction


class MirrorLabError(Exception):
    """Базовое исключение для всех ошибок проекта."""


class DomainError(MirrorLabError, ValueError):
    """Нарушено предусловие операции (недопустимые входные данные)."""


class ResonanceError(DomainError):
    """
    Шаг метода Фробениуса не имеет решения.

    Атрибуты:
    - exponent: Показатель, на котором возникло препятствие.
    """

    def __init__(self, message: str, exponent: Fraction) -> None:
        super().__init__(message)
        self.exponent = exponent


class PoleError(DomainError):
    """
    Гамма-функция вычисляется в полюсе.

    Атрибуты:
    - pole: Неположительное целое число, в котором находится полюс.
    """

    def __init__(self, message: str, pole: int) -> None:
        super().__init__(message)
        self.pole = pole


class DivergentDirectionError(DomainError):
    """
    Подынтегральное выражение не убывает вдоль контура.

    Атрибуты:
    - exponent: Показатель вставки, дающий наибольший рост.
    - side: Направление ("+" или "-"), в котором нарушено убывание.
    """

    def __init__(self, message: str, exponent: int, side: str) -> None:
        super().__init__(message)
        self.exponent = exponent
        self.side = side


class DecompositionError(DomainError):
    """
    Разложение характера для аналитического продолжения не найдено.

    Атрибуты:
    - remainder: Ненулевой остаток от деления.
    """

    def __init__(self, message: str, remainder: object) -> None:
        super().__init__(message)
        self.remainder = remainder


class InternalConsistencyError(MirrorLabError):
    """Промежуточный результат противоречит ожидаемой структуре."""


class VerificationError(MirrorLabError):
    """
    Проверка тождества завершилась неудачей.

    Атрибуты:
    - report: Отчёт проверки с описанием нарушенных тождеств.
    """

    def __init__(self, message: str, report: object = None) -> None:
        super().__init__(message)
        self.report = report


class ConvergenceError(MirrorLabError):
    """Численный метод не достиг требуемой точности."""


class OutputError(MirrorLabError):
    """
    Результат не удалось записать.

    Атрибуты:
    - path: Путь, в который велась запись.
    """

    def __init__(self, message: str, path: str) -> None:
        super().__init__(message)
        self.path = path
