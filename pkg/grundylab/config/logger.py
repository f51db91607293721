"""Логирование: stderr для диагностики, файлы JSON при заданном GRUNDYLAB_LOG_DIR."""

__all__ = [
    "logger",
    "get_logger",
    "set_console_level",
]

import sys
from collections.abc import Callable
from pathlib import Path
from typing import TYPE_CHECKING, Literal

from loguru import logger

from grundylab.schemas import EnvironmentType

from .config import config

if TYPE_CHECKING:
    from loguru import Logger, Record

type Level = Literal["ERROR", "WARNING", "INFO", "DEBUG", "TRACE"]

_CONSOLE_FORMAT = "<dim>{time:HH:mm:ss.SSS}</dim> <level>{level: <7}</level> {extra[name]}: {message}"


def _write_stderr(message: str) -> None:
    # sys.stderr is looked up per call: typer.testing swaps it
    sys.stderr.write(message)


class LoggerFactory:
    """Именованные логгеры пакета. stdout занят выводом команд, поэтому консольный вывод идет в stderr."""

    logger.remove()

    _retentions: dict[str, str] = {
        "ERROR": "1 month",
        "WARNING": "1 month",
        "INFO": "1 week",
        "DEBUG": "1 day",
        "TRACE": "3 hours",
    }

    _loggers: dict[str, "Logger"] = {}
    _console_ids: dict[str, int] = {}
    _console_level: str | None = None

    @classmethod
    def get_logger(
        cls,
        name: str = "grundylab",
        base_dir: str | None = config.logging.directory,
        file_levels: list[Level] | None = None,
    ) -> "Logger":
        """
        Возвращает логгер с именем name, создавая его при первом обращении.

        :param name: Имя логгера и подкаталога с лог-файлами.
        :param base_dir: Каталог лог-файлов. Без него пишем только в stderr.
        :param file_levels: Уровни файловых журналов (по умолчанию ERROR и DEBUG).
        """
        if name in cls._loggers:
            return cls._loggers[name]

        log = logger.bind(name=name)
        cls._console_ids[name] = cls._add_console(name, cls.console_level())

        if base_dir:
            directory = Path(base_dir) / name
            directory.mkdir(parents=True, exist_ok=True)
            for level in file_levels or ["ERROR", "DEBUG"]:
                log.add(
                    directory / f"{level.lower()}.jsonl",
                    level=level,
                    filter=cls._only(name),
                    serialize=True,
                    retention=cls._retentions[level],
                    rotation="10 MB",
                    compression="zip",
                    encoding="utf-8",
                )

        cls._loggers[name] = log
        return log

    @classmethod
    def console_level(cls) -> str:
        if cls._console_level is not None:
            return cls._console_level
        if config.environment == EnvironmentType.DEVELOPMENT:
            return "DEBUG"
        return config.logging.level

    @classmethod
    def set_console_level(cls, level: Level) -> None:
        """Меняет уровень вывода в stderr у всех уже созданных логгеров."""
        cls._console_level = level
        for name, handler_id in cls._console_ids.items():
            logger.remove(handler_id)
            cls._console_ids[name] = cls._add_console(name, level)

    @classmethod
    def _add_console(cls, name: str, level: str) -> int:
        return logger.add(_write_stderr, level=level, filter=cls._only(name), format=_CONSOLE_FORMAT)

    @staticmethod
    def _only(name: str) -> Callable[["Record"], bool]:
        def accept(record: "Record") -> bool:
            return record["extra"].get("name") == name

        return accept


get_logger = LoggerFactory.get_logger
set_console_level = LoggerFactory.set_console_level

logger = get_logger()
