"""Интерфейс доступа к конфигурации и логированию."""

__all__ = [
    "get_logger",
    "set_console_level",
    "logger",
    "config",
    "Configuration",
    "UINT64_MAX",
]

from .config import UINT64_MAX, Configuration, config
from .logger import get_logger, logger, set_console_level
