"""Отрисовка результатов в таблицу, CSV или JSON."""

__all__ = ["render_rows", "render_sequence", "render_triangle"]

import csv
import io
from collections.abc import Iterable, Sequence

from rich.console import Console
from rich.table import Table

from grundylab.models import SubadditiveTriangle
from grundylab.schemas import OutputFormat


def render_rows(
    columns: Sequence[str],
    rows: Iterable[Sequence[object]],
    fmt: OutputFormat,
    title: str | None = None,
) -> str:
    """Рисует строки как таблицу rich или CSV. JSON собирается из моделей отдельно."""
    if fmt == OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")

    table = Table(*columns, title=title)
    for row in rows:
        table.add_row(*("" if cell is None else str(cell) for cell in row))
    console = Console(file=io.StringIO(), width=160, color_system=None)
    console.print(table)
    return console.file.getvalue().rstrip("\n")  # type: ignore[attr-defined]


def render_sequence(values: Sequence[int], fmt: OutputFormat, name: str = "g") -> str:
    """Пары (n, значение) по строкам."""
    return render_rows(("n", name), enumerate(values), fmt)


def render_triangle(triangle: SubadditiveTriangle, fmt: OutputFormat) -> str:
    """Треугольник в виде таблицы: строка i, столбцы j = 1 … dim − 1."""
    if fmt == OutputFormat.JSON:
        return triangle.model_dump_json()
    columns = ("i", *(str(j) for j in range(1, triangle.dim)))
    rows = [
        (i, *([None] * i), *triangle.rows[i])
        for i in range(triangle.dim - 1)
    ]
    return render_rows(columns, rows, fmt)
