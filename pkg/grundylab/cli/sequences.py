"""Команды max и min."""

__all__ = ["compute_max", "compute_min"]

from typing import Annotated

import typer

from grundylab.core import check_window
from grundylab.maxnim import closed_prefix, fast_grundy, naive_grundy
from grundylab.minnim import closed_min_half, fast_min_grundy, naive_min_grundy
from grundylab.models import GrundyPrefix, RuleSequence, SequenceReport
from grundylab.schemas import GameKind, Method, OutputFormat, RuleKind
from grundylab.utils import render_sequence

from .common import app, domain_errors, emit, parse_rule, resolve_format

RuleOption = Annotated[str, typer.Option("--rule", "-r", help="half | sqrt | pow2 | table:<path> | serial:<a1,a2,...>")]
TermsOption = Annotated[int, typer.Option("--n", "-n", min=0, help="Number of terms.")]
FormatOption = Annotated[OutputFormat | None, typer.Option("--format", "-f", help="table | csv | json")]


def compute_max(rule: RuleSequence, n_terms: int, method: Method) -> GrundyPrefix:
    """Префикс Maximum Nim заданным методом."""
    match method:
        case Method.NAIVE:
            return naive_grundy(rule, n_terms)
        case Method.CLOSED:
            return closed_prefix(rule, n_terms)
        case _:
            return fast_grundy(rule, n_terms)


def compute_min(rule: RuleSequence, n_terms: int, method: Method) -> GrundyPrefix:
    """Префикс Minimum Nim заданным методом."""
    match method:
        case Method.NAIVE:
            return naive_min_grundy(rule, n_terms)
        case Method.CLOSED:
            if rule.kind != RuleKind.HALF:
                raise typer.BadParameter("closed method needs --rule half", param_hint="--method")
            if n_terms > 0:
                check_window(rule, n_terms - 1)
            return GrundyPrefix(
                values=tuple(map(closed_min_half, range(n_terms))),
                rule=rule,
                game=GameKind.MINIMUM,
                method=Method.CLOSED,
            )
        case _:
            return fast_min_grundy(rule, n_terms)


def _print(prefix: GrundyPrefix, rule: RuleSequence, fmt: OutputFormat | None) -> None:
    fmt = resolve_format(fmt)
    if fmt == OutputFormat.JSON:
        report = SequenceReport(
            rule=rule.label,
            game=prefix.game,
            method=prefix.method,
            n=len(prefix),
            values=prefix.values,
        )
        emit(report.model_dump_json())
        return
    emit(render_sequence(prefix.values, fmt, "g" if prefix.game == GameKind.MAXIMUM else "h"))


@app.command("max")
def cmd_max(
    rule: RuleOption = "half",
    n: TermsOption = 22,
    method: Annotated[Method, typer.Option("--method", "-m", help="fast | naive | closed")] = Method.FAST,
    fmt: FormatOption = None,
) -> None:
    """Grundy values g(0), ..., g(n-1) of Maximum Nim."""
    if method == Method.FROM_TRIANGLE:
        raise typer.BadParameter("use `triangle reconstruct`", param_hint="--method")
    with domain_errors():
        parsed = parse_rule(rule)
        if method == Method.CLOSED and parsed.kind not in (RuleKind.HALF, RuleKind.POW2):
            raise typer.BadParameter("closed method needs --rule half or pow2", param_hint="--method")
        _print(compute_max(parsed, n, method), parsed, fmt)


@app.command("min")
def cmd_min(
    rule: RuleOption = "half",
    n: TermsOption = 17,
    method: Annotated[Method, typer.Option("--method", "-m", help="fast | naive | closed")] = Method.FAST,
    fmt: FormatOption = None,
) -> None:
    """Grundy values h(0), ..., h(n-1) of Minimum Nim."""
    if method == Method.FROM_TRIANGLE:
        raise typer.BadParameter("use `triangle reconstruct`", param_hint="--method")
    with domain_errors():
        parsed = parse_rule(rule)
        _print(compute_min(parsed, n, method), parsed, fmt)
