"""Иерархия ошибок предметной области."""

__all__ = [
    "GrundyLabError",
    "HorizonError",
    "RuleTableError",
    "NotWeaklyIncreasingError",
    "NotRegularError",
    "QUndefinedError",
    "FractalViolationError",
    "TriangleError",
    "NotRealizableError",
    "InsufficientHorizonError",
    "WindowTooShortError",
    "PairOutOfRangeError",
    "PairNotFoundError",
    "SerialPositionError",
    "SerialSizeLimitError",
    "NaturalOverflowError",
    "MethodMismatchError",
]

from typing import Any


class GrundyLabError(ValueError):
    """Базовая ошибка. Хранит свидетеля нарушения, если он есть."""

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.message = message
        self.witness = witness


class HorizonError(GrundyLabError):
    """Запрошенный индекс лежит за горизонтом правила."""


class RuleTableError(GrundyLabError):
    """Некорректная таблица правила (witness: номер строки или индекс)."""


class NotWeaklyIncreasingError(GrundyLabError):
    """Правило не является неубывающим (witness: наименьший n с f(n) < f(n−1))."""


class NotRegularError(GrundyLabError):
    """Правило не регулярно (witness: наименьший нарушающий n)."""


class QUndefinedError(GrundyLabError):
    """Не нашлось j ≤ горизонта с j − f(j) > k."""


class FractalViolationError(GrundyLabError):
    """Префикс нарушает F2 (witness: индекс)."""


class TriangleError(GrundyLabError):
    """Треугольник не годится для операции."""


class NotRealizableError(TriangleError):
    """Вектор сумм столбцов не реализуется субаддитивным треугольником."""


class InsufficientHorizonError(GrundyLabError):
    """Горизонта или размерности не хватает для запрошенной формы."""


class WindowTooShortError(GrundyLabError):
    """Окно слишком короткое, чтобы вынести вердикт."""


class PairOutOfRangeError(GrundyLabError):
    """Пара (i, j) с j < s₀ᵢ не принадлежит образу биекции."""


class PairNotFoundError(GrundyLabError):
    """Позиция пары лежит дальше границы поиска."""


class SerialPositionError(GrundyLabError):
    """Некорректная позиция Serial Nim."""


class SerialSizeLimitError(SerialPositionError):
    """Позиция слишком велика для оракула."""


class NaturalOverflowError(GrundyLabError, OverflowError):
    """Значение не помещается в 64-битное натуральное."""


class MethodMismatchError(GrundyLabError):
    """Два метода дали разные значения на одном окне (witness: (n, индекс))."""
