"""Команда bench: замеры fast, naive и closed после сверки значений."""

__all__ = ["host_info", "run_bench"]

import platform
import time
from collections.abc import Callable
from typing import Annotated

import psutil
import typer

from grundylab.config import logger
from grundylab.exceptions import MethodMismatchError
from grundylab.models import BenchReport, GrundyPrefix, HostInfo, RuleSequence, Timing
from grundylab.schemas import GameKind, Method, OutputFormat
from grundylab.utils import render_rows

from .common import EXIT_FAIL, app, domain_errors, emit, parse_rule, resolve_format
from .sequences import compute_max, compute_min


def host_info() -> HostInfo:
    """Платформа, число CPU и объем памяти машины."""
    return HostInfo(
        platform=platform.platform(),
        python=platform.python_version(),
        cpu_count=psutil.cpu_count(logical=True),
        memory_total=psutil.virtual_memory().total,
    )


def run_bench(rule: RuleSequence, sizes: list[int], methods: list[Method], game: GameKind) -> BenchReport:
    """Считает префиксы каждым методом, сверяет значения и только затем отдает замеры.

    :raises MethodMismatchError: Значения методов расходятся (witness: (n, индекс)).
    """
    compute: Callable[[RuleSequence, int, Method], GrundyPrefix] = (
        compute_max if game == GameKind.MAXIMUM else compute_min
    )
    timings: list[Timing] = []
    speedup: dict[int, float] = {}
    for n in sizes:
        results: dict[Method, tuple[tuple[int, ...], float]] = {}
        for method in methods:
            start = time.perf_counter()
            prefix = compute(rule, n, method)
            results[method] = (prefix.values, time.perf_counter() - start)

        reference, _ = results[methods[0]]
        for method, (values, _) in results.items():
            if values != reference:
                index = next(k for k, (a, b) in enumerate(zip(values, reference, strict=True)) if a != b)
                raise MethodMismatchError(
                    f"{method} and {methods[0]} disagree at n={index} for {n} terms",
                    witness=(n, index),
                )

        for method, (_, seconds) in results.items():
            timings.append(
                Timing(method=method, n=n, seconds=seconds, terms_per_second=n / seconds if seconds else 0.0)
            )
            logger.debug(f"bench {rule.label} {method} n={n}: {seconds:.4f} s")
        if Method.NAIVE in results and Method.FAST in results and results[Method.FAST][1] > 0:
            speedup[n] = results[Method.NAIVE][1] / results[Method.FAST][1]

    return BenchReport(
        rule=rule.label, game=game, host=host_info(), timings=tuple(timings), speedup=speedup
    )


@app.command("bench")
def cmd_bench(
    rule: Annotated[str, typer.Option("--rule", "-r")] = "half",
    n: Annotated[int, typer.Option("--n", "-n", min=1)] = 100_000,
    methods: Annotated[str, typer.Option("--methods", "-m", help="Comma-separated: fast,naive,closed")] = "fast,naive",
    game: Annotated[GameKind, typer.Option("--game", "-g")] = GameKind.MAXIMUM,
    ladder: Annotated[bool, typer.Option("--ladder", help="Also time n/4 and n/2.")] = False,
    fmt: Annotated[OutputFormat | None, typer.Option("--format", "-f")] = None,
) -> None:
    """Time the methods on the same window after checking that they agree."""
    try:
        chosen = [Method(name.strip()) for name in methods.split(",")]
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--methods") from e
    if Method.FROM_TRIANGLE in chosen:
        raise typer.BadParameter("from_triangle is not a benchmark method", param_hint="--methods")
    sizes = sorted({n // 4, n // 2, n} - {0}) if ladder else [n]

    with domain_errors():
        try:
            report = run_bench(parse_rule(rule), sizes, chosen, game)
        except MethodMismatchError as e:
            logger.error(e.message)
            typer.echo(f"verification failed: {e.message}", err=True)
            raise typer.Exit(EXIT_FAIL) from e

    fmt = resolve_format(fmt)
    if fmt == OutputFormat.JSON:
        emit(report.model_dump_json())
        return
    rows = [
        (t.method, t.n, f"{t.seconds:.4f}", f"{t.terms_per_second:.0f}", _ratio(report, t))
        for t in report.timings
    ]
    emit(render_rows(("method", "n", "seconds", "terms/s", "naive/fast"), rows, fmt, title=report.rule))


def _ratio(report: BenchReport, timing: Timing) -> str:
    if timing.method != Method.FAST or timing.n not in report.speedup:
        return ""
    return f"{report.speedup[timing.n]:.1f}"
