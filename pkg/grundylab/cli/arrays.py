"""Команды arrays и schema."""

import json
from typing import Annotated

import typer
from pydantic import BaseModel

from grundylab.minnim import build_arrays, offset_array_json, render_offset_array
from grundylab.models import (
    BenchReport,
    OffsetArray,
    SequenceReport,
    SerialReport,
    SubadditiveTriangle,
    VerifyReport,
)
from grundylab.schemas import OutputFormat, SchemaName

from .common import app, domain_errors, emit, parse_rule

_SCHEMAS: dict[SchemaName, type[BaseModel]] = {
    SchemaName.SEQUENCE: SequenceReport,
    SchemaName.VERIFY: VerifyReport,
    SchemaName.BENCH: BenchReport,
    SchemaName.SERIAL: SerialReport,
    SchemaName.TRIANGLE: SubadditiveTriangle,
    SchemaName.ARRAYS: OffsetArray,
}


@app.command("arrays")
def cmd_arrays(
    rule: Annotated[str, typer.Option("--rule", "-r")] = "half",
    rows: Annotated[int, typer.Option("--rows", min=1)] = 5,
    cols: Annotated[int, typer.Option("--cols", min=1)] = 7,
    fmt: Annotated[OutputFormat, typer.Option("--format", "-f", help="table (text) | json")] = OutputFormat.TABLE,
) -> None:
    """The array A' of positions n with (g(n), h(n)) = (i, j), and its left-justified form A."""
    with domain_errors():
        offset_array, left = build_arrays(parse_rule(rule), rows, cols)
    if fmt == OutputFormat.JSON:
        emit(offset_array_json(offset_array))
        return
    left_text = "\n".join(" ".join(map(str, row)) for row in left)
    emit(f"A':\n{render_offset_array(offset_array, cols)}\n\nA:\n{left_text}")


@app.command("schema")
def cmd_schema(name: Annotated[SchemaName, typer.Argument(help="Output model name.")]) -> None:
    """JSON schema of a command's JSON output."""
    emit(json.dumps(_SCHEMAS[name].model_json_schema(), indent=2))
