"""Команды serial: значение позиции, выигрывающий ход, таблица двух кучек."""

from typing import Annotated

import typer

from grundylab.models import SerialReport
from grundylab.schemas import OutputFormat
from grundylab.serialnim import (
    serial_grundy,
    serial_table,
    serial_winning_move,
    smallest_nim_grundy,
)

from .common import app, domain_errors, emit, parse_naturals

serial_app = typer.Typer(no_args_is_help=True, help="Serial Nim: only the leftmost nonempty heap moves.")
app.add_typer(serial_app, name="serial")

HeapsOption = Annotated[str, typer.Option("--heaps", "-H", help="Heap sizes left to right, e.g. 5,3.")]
FormatOption = Annotated[OutputFormat | None, typer.Option("--format", "-f", help="json for a report")]


def _emit(report: SerialReport, fmt: OutputFormat | None, text: str) -> None:
    emit(report.model_dump_json() if fmt == OutputFormat.JSON else text)


@serial_app.command("solve")
def cmd_solve(
    heaps: HeapsOption,
    smallest: Annotated[bool, typer.Option("--smallest", help="Sort heaps first (Smallest Nim).")] = False,
    fmt: FormatOption = None,
) -> None:
    """Grundy value of a row of heaps."""
    sizes = parse_naturals(heaps)
    with domain_errors():
        value = smallest_nim_grundy(sizes) if smallest else serial_grundy(sizes)
    if smallest:
        sizes.sort()
    _emit(SerialReport(heaps=tuple(sizes), value=value), fmt, str(value))


@serial_app.command("move")
def cmd_move(heaps: HeapsOption, fmt: FormatOption = None) -> None:
    """Winning reduction of the leftmost heap, or `none`."""
    sizes = parse_naturals(heaps)
    with domain_errors():
        value = serial_grundy(sizes)
        move = serial_winning_move(sizes)
    text = "none" if move is None else f"{sizes[0]} -> {move}"
    _emit(SerialReport(heaps=tuple(sizes), value=value, move=move), fmt, text)


@serial_app.command("table")
def cmd_table(
    heaps: HeapsOption,
    limit: Annotated[int, typer.Option("--limit", "-l", min=1, help="Values of a in [a, heaps...].")] = 8,
    fmt: FormatOption = None,
) -> None:
    """Values of [a, heaps...] for a = 0 .. limit-1."""
    sizes = parse_naturals(heaps)
    with domain_errors():
        values = serial_table(sizes, limit)
        value = serial_grundy(sizes)
    report = SerialReport(heaps=tuple(sizes), value=value, table=tuple(values))
    _emit(report, fmt, ",".join(map(str, values)))
