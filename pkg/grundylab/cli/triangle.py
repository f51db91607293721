"""Команды triangle: выгрузка, восстановление последовательности, восстановление по суммам."""

from pathlib import Path
from typing import Annotated

import typer

from grundylab.fractal import from_column_sums, sequence_from_triangle, triangle_of
from grundylab.maxnim import prefix_with_values
from grundylab.models import SequenceReport
from grundylab.schemas import GameKind, Method, OutputFormat
from grundylab.utils import read_triangle, render_sequence, render_triangle

from .common import app, domain_errors, emit, parse_naturals, parse_rule, resolve_format

triangle_app = typer.Typer(no_args_is_help=True, help="Subadditive triangles of fractal sequences.")
app.add_typer(triangle_app, name="triangle")

OutOption = Annotated[Path | None, typer.Option("--out", "-o", help="Write JSON to this file.")]
FormatOption = Annotated[OutputFormat | None, typer.Option("--format", "-f")]


@triangle_app.command("emit")
def cmd_emit(
    rule: Annotated[str, typer.Option("--rule", "-r")] = "half",
    dim: Annotated[int, typer.Option("--dim", "-d", min=1, help="Number of rows (values 0..dim).")] = 10,
    out: OutOption = None,
    fmt: FormatOption = None,
) -> None:
    """Triangle s(i, j) of the Grundy sequence for 0 <= i < j <= dim."""
    with domain_errors():
        prefix = prefix_with_values(parse_rule(rule), dim + 1)
        triangle = triangle_of(prefix)
    if out is not None:
        emit(triangle.model_dump_json(), out)
        return
    emit(render_triangle(triangle, resolve_format(fmt)))


@triangle_app.command("reconstruct")
def cmd_reconstruct(
    source: Annotated[Path, typer.Option("--input", "-i", help="Triangle JSON file.")],
    n: Annotated[int | None, typer.Option("--n", "-n", min=1, help="Number of terms.")] = None,
    fmt: FormatOption = None,
) -> None:
    """Rebuild the fractal prefix determined by a triangle."""
    with domain_errors():
        prefix = sequence_from_triangle(read_triangle(source), n)
    fmt = resolve_format(fmt)
    if fmt == OutputFormat.JSON:
        report = SequenceReport(
            rule=str(source),
            game=GameKind.MAXIMUM,
            method=Method.FROM_TRIANGLE,
            n=len(prefix),
            values=prefix.values,
        )
        emit(report.model_dump_json())
        return
    emit(render_sequence(prefix.values, fmt))


@triangle_app.command("from-colsums")
def cmd_from_colsums(
    sums: Annotated[str, typer.Option("--sums", "-c", help="Column sums c1,c2,...")],
    out: OutOption = None,
    fmt: FormatOption = None,
) -> None:
    """Rebuild the triangle from its column sums."""
    values = parse_naturals(sums, "--sums")
    with domain_errors():
        triangle = from_column_sums(values)
    if out is not None:
        emit(triangle.model_dump_json(), out)
        return
    emit(render_triangle(triangle, resolve_format(fmt)))
