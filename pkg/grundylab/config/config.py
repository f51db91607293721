"""
Конфигурационные данные библиотеки и CLI.
"""

__all__ = ["config", "Configuration", "UINT64_MAX"]

import os
from dataclasses import dataclass
from os import getenv

from grundylab.schemas import EnvironmentType

UINT64_MAX: int = 2**64 - 1
"""Верхняя граница натуральных чисел (фиксированная ширина 64 бита)."""


@dataclass(frozen=True)
class _LoggingConfig:
    """Параметры логирования."""

    level: str = getenv("GRUNDYLAB_LOG_LEVEL", "WARNING").upper()
    """Уровень логирования для вывода в stderr."""

    directory: str | None = getenv("GRUNDYLAB_LOG_DIR")
    """Директория для лог-файлов. Если не задана, файлы не пишутся."""


@dataclass(frozen=True)
class _LimitsConfig:
    """Ограничения на размеры вычислений."""

    horizon: int = int(getenv("GRUNDYLAB_HORIZON", str(2**22)))
    """Горизонт по умолчанию для предустановленных правил и потолок окна в CLI."""

    serial_limit: int = int(getenv("GRUNDYLAB_SERIAL_LIMIT", str(10**6)))
    """Максимальное суммарное число камней для оракула Serial Nim."""


@dataclass(frozen=True)
class Configuration:
    """Единая точка доступа к настройкам."""

    logging: _LoggingConfig = _LoggingConfig()
    """Конфигурация логирования."""

    limits: _LimitsConfig = _LimitsConfig()
    """Ограничения вычислений."""

    try:
        environment: EnvironmentType = EnvironmentType(
            os.getenv("GRUNDYLAB_ENVIRONMENT", "production")
        )
        """Текущее окружение."""
    except ValueError as err:
        raise ValueError(f"Invalid environment: {os.getenv('GRUNDYLAB_ENVIRONMENT')}") from err

    @property
    def horizon(self) -> int:
        """Горизонт по умолчанию."""
        return self.limits.horizon


config: Configuration = Configuration()
