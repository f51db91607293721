"""Перечисления, используемые в библиотеке и CLI."""

__all__ = [
    "EnvironmentType",
    "RuleKind",
    "GameKind",
    "Method",
    "Status",
    "OutputFormat",
    "VerifyTarget",
    "SchemaName",
]

from enum import StrEnum


class EnvironmentType(StrEnum):
    """Перечисление типов окружения."""

    DEVELOPMENT = "development"
    PRODUCTION = "production"


class RuleKind(StrEnum):
    """Вид последовательности-правила f."""

    HALF = "half"
    """f(n) = ⌊(n−1)/2⌋, f(0) = 0."""

    SQRT = "sqrt"
    """f(n) = ⌊√n⌋."""

    POW2 = "pow2"
    """f(n) = (наибольшая степень двойки ≤ n) − 1, f(0) = 0."""

    TABLE = "table"
    """Явная таблица значений."""

    SERIAL = "serial"
    """Правило 1,2,…,a₁,1,2,…,a₂,… из ряда кучек."""


class GameKind(StrEnum):
    """Вариант игры."""

    MAXIMUM = "maximum"
    MINIMUM = "minimum"


class Method(StrEnum):
    """Способ вычисления префикса."""

    NAIVE = "naive"
    FAST = "fast"
    CLOSED = "closed"
    FROM_TRIANGLE = "from_triangle"


class Status(StrEnum):
    """Трехзначный вердикт проверки на конечном окне."""

    PASS = "pass"
    FAIL = "fail"
    UNDETERMINED = "undetermined"


class OutputFormat(StrEnum):
    """Форматы вывода CLI."""

    TABLE = "table"
    CSV = "csv"
    JSON = "json"


class VerifyTarget(StrEnum):
    """Наборы проверок команды verify."""

    FRACTAL = "fractal"
    INTERSPERSION = "interspersion"
    MINIMAX = "minimax"
    BIJECTION = "bijection"
    TRIANGLE_ROUNDTRIP = "triangle-roundtrip"
    SERIAL_ORACLE = "serial-oracle"


class SchemaName(StrEnum):
    """Модели JSON-вывода, для которых команда schema печатает схему."""

    SEQUENCE = "sequence"
    VERIFY = "verify"
    BENCH = "bench"
    SERIAL = "serial"
    TRIANGLE = "triangle"
    ARRAYS = "arrays"
