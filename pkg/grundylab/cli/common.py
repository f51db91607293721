"""Общие части командной строки: приложение typer, разбор правил, коды выхода."""

__all__ = [
    "app",
    "EXIT_FAIL",
    "EXIT_DOMAIN",
    "domain_errors",
    "parse_rule",
    "parse_naturals",
    "resolve_format",
    "emit",
]

import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated

import typer
from pydantic import ValidationError

from grundylab.config import logger, set_console_level
from grundylab.config.logger import Level
from grundylab.exceptions import GrundyLabError
from grundylab.models import RuleSequence
from grundylab.schemas import OutputFormat, RuleKind
from grundylab.utils import read_rule_table, write_text

EXIT_FAIL = 1
"""Проверка нашла нарушение."""

EXIT_DOMAIN = 3
"""Ошибка предметной области: горизонт, переполнение, некорректное правило."""

app = typer.Typer(
    name="grundylab",
    no_args_is_help=True,
    add_completion=False,
    help="Grundy sequences of Maximum, Minimum and Serial Nim.",
)

_VERBOSITY: tuple[Level, ...] = ("INFO", "DEBUG", "TRACE")


@app.callback()
def main(
    verbose: Annotated[
        int, typer.Option("--verbose", "-v", count=True, help="-v info, -vv debug, -vvv trace.")
    ] = 0,
) -> None:
    if verbose:
        set_console_level(_VERBOSITY[min(verbose, len(_VERBOSITY)) - 1])


@contextmanager
def domain_errors() -> Iterator[None]:
    """Превращает ошибки предметной области в код выхода 3."""
    try:
        yield
    except (GrundyLabError, ValidationError) as e:
        message = e.message if isinstance(e, GrundyLabError) else str(e)
        logger.error(message)
        typer.echo(f"error: {message}", err=True)
        raise typer.Exit(EXIT_DOMAIN) from e


def parse_naturals(text: str, param: str = "--heaps") -> list[int]:
    """Разбирает список вида 3,5,2.

    :raises typer.BadParameter: Элемент не натуральное число (с позицией в строке).
    """
    values: list[int] = []
    position = 0
    for item in text.split(","):
        if not (item.strip().isascii() and item.strip().isdecimal()):
            raise typer.BadParameter(
                f"expected a natural number at position {position}, got {item!r}",
                param_hint=param,
            )
        values.append(int(item))
        position += len(item) + 1
    return values


def parse_rule(text: str) -> RuleSequence:
    """Разбирает half | sqrt | pow2 | table:<path> | serial:<a1,a2,...>."""
    kind, _, argument = text.partition(":")
    match kind:
        case RuleKind.HALF | RuleKind.SQRT | RuleKind.POW2 if not argument:
            return RuleSequence.preset(RuleKind(kind))
        case RuleKind.TABLE if argument:
            return read_rule_table(Path(argument))
        case RuleKind.SERIAL if argument:
            heaps = parse_naturals(argument, "--rule")
            if 0 in heaps:
                raise typer.BadParameter(
                    f"serial heaps must be positive, got {argument!r}", param_hint="--rule"
                )
            return RuleSequence.serial(heaps)
    raise typer.BadParameter(
        f"unknown rule {text!r}: expected half, sqrt, pow2, table:<path> or serial:<a1,a2,...>",
        param_hint="--rule",
    )


def resolve_format(fmt: OutputFormat | None) -> OutputFormat:
    """Таблица для терминала, CSV при перенаправлении вывода."""
    if fmt is not None:
        return fmt
    return OutputFormat.TABLE if sys.stdout.isatty() else OutputFormat.CSV


def emit(text: str, out: Path | None = None) -> None:
    """Печатает результат в stdout или пишет в файл."""
    if out is None:
        typer.echo(text)
        return
    write_text(out, text)
