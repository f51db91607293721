"""Команда verify: наборы проверок на конечном окне."""

__all__ = ["run_checks"]

from pathlib import Path
from typing import Annotated

import typer

from grundylab.fractal import (
    associated_array,
    check_fractal,
    check_interspersion_array,
    check_interspersion_prefix,
    column_sums,
    f2_violation,
    from_column_sums,
    sequence_from_triangle,
    triangle_of,
    validate_triangle,
)
from grundylab.maxnim import first_instances, grundy
from grundylab.minnim import check_pair_bijection, fast_min_grundy, min_from_max, naive_min_grundy
from grundylab.models import NamedCheck, RuleSequence, Verdict, VerifyReport
from grundylab.schemas import OutputFormat, RuleKind, VerifyTarget
from grundylab.serialnim import check_serial_closed_form, check_serial_maxnim_equivalence
from grundylab.utils import read_sequence, render_rows

from .common import EXIT_FAIL, app, domain_errors, emit, parse_rule, resolve_format

_NEEDS_RULE = {VerifyTarget.MINIMAX, VerifyTarget.BIJECTION}

_MAX_TRIANGLE_DIM = 96
"""Проверка субаддитивности кубична по размерности, дальше префикс обрезается."""


def _compare(window: int, left: tuple[int, ...], right: tuple[int, ...], detail: str) -> Verdict:
    mismatch = next((n for n, (a, b) in enumerate(zip(left, right, strict=True)) if a != b), None)
    if mismatch is None:
        return Verdict.passed(window)
    return Verdict.failed(
        window, f"{detail}: {left[mismatch]} != {right[mismatch]} at n={mismatch}", witness=mismatch
    )


def _triangle_checks(values: list[int]) -> list[NamedCheck]:
    window = len(values)
    witness = f2_violation(values)
    if witness is not None:
        return [NamedCheck(name="f2", verdict=Verdict.failed(window, "prefix violates F2", witness))]

    firsts = first_instances(values)
    if len(firsts) > _MAX_TRIANGLE_DIM:
        values = values[: firsts[_MAX_TRIANGLE_DIM]]
    triangle = triangle_of(values)
    subadditive = validate_triangle(triangle)
    checks = [NamedCheck(name="subadditive", verdict=subadditive)]
    if not subadditive.ok:
        return checks

    rebuilt = sequence_from_triangle(triangle)
    checks.append(
        NamedCheck(
            name="sequence_from_triangle",
            verdict=_compare(
                len(rebuilt), rebuilt.values, tuple(values[: len(rebuilt)]), "rebuilt prefix differs"
            ),
        )
    )
    if triangle.dim > 1:
        same = from_column_sums(column_sums(triangle)) == triangle
        checks.append(
            NamedCheck(
                name="from_column_sums",
                verdict=Verdict.passed(triangle.dim)
                if same
                else Verdict.failed(triangle.dim, "column sums rebuild a different triangle"),
            )
        )
    return checks


def run_checks(target: VerifyTarget, values: list[int], rule: RuleSequence | None) -> list[NamedCheck]:
    """Выполняет набор проверок для префикса values (и правила, если оно есть)."""
    window = len(values)
    match target:
        case VerifyTarget.FRACTAL:
            verdict = check_fractal(values)
            return [NamedCheck(name="f2", verdict=verdict.f2), NamedCheck(name="f3", verdict=verdict.f3)]
        case VerifyTarget.INTERSPERSION:
            return [
                NamedCheck(name="pairs", verdict=check_interspersion_prefix(values)),
                NamedCheck(name="array", verdict=check_interspersion_array(associated_array(values))),
            ]
        case VerifyTarget.MINIMAX:
            assert rule is not None
            fast = fast_min_grundy(rule, window)
            naive = naive_min_grundy(rule, window)
            coupled = min_from_max(grundy(rule, window))
            return [
                NamedCheck(
                    name="fast_vs_naive",
                    verdict=_compare(window, fast.values, naive.values, "fast and naive h differ"),
                ),
                NamedCheck(
                    name="zeros_of_g",
                    verdict=_compare(window, coupled.values, fast.values, "zero count of g differs from h"),
                ),
            ]
        case VerifyTarget.BIJECTION:
            assert rule is not None
            return [NamedCheck(name="pairs", verdict=check_pair_bijection(rule, window))]
        case VerifyTarget.TRIANGLE_ROUNDTRIP:
            return _triangle_checks(values)
        case VerifyTarget.SERIAL_ORACLE:
            checks = [NamedCheck(name="closed_form", verdict=check_serial_closed_form())]
            if rule is not None and rule.kind == RuleKind.SERIAL and rule.heaps is not None:
                failed = next(
                    (
                        verdict
                        for n in range(rule.horizon + 1)
                        if not (verdict := check_serial_maxnim_equivalence(rule.heaps, n)).ok
                    ),
                    None,
                )
                checks.append(
                    NamedCheck(
                        name="maximum_nim_equivalence",
                        verdict=failed if failed is not None else Verdict.passed(rule.horizon + 1),
                    )
                )
            return checks
    raise AssertionError(f"unknown verify target {target}")


@app.command("verify")
def cmd_verify(
    target: Annotated[VerifyTarget, typer.Argument(help="What to verify.")],
    rule: Annotated[str | None, typer.Option("--rule", "-r", help="Rule that generates the prefix.")] = None,
    n: Annotated[
        int | None, typer.Option("--n", "-n", min=1, help="Window length (4096; 1024 for interspersion).")
    ] = None,
    sequence: Annotated[
        Path | None,
        typer.Option("--sequence", "-s", help="Prefix file: one term per line or a JSON array."),
    ] = None,
    fmt: Annotated[OutputFormat | None, typer.Option("--format", "-f")] = None,
) -> None:
    """Run a verification suite; exit 0 on pass, 1 on a violation."""
    if rule is not None and sequence is not None:
        raise typer.BadParameter("pass either --rule or --sequence", param_hint="--sequence")
    if sequence is not None and target in _NEEDS_RULE:
        raise typer.BadParameter(f"{target} needs --rule", param_hint="--sequence")
    if rule is None and sequence is None and target != VerifyTarget.SERIAL_ORACLE:
        rule = "half"
    if n is None:
        # the array check is quadratic in the number of distinct values
        n = 1024 if target == VerifyTarget.INTERSPERSION else 4096

    with domain_errors():
        parsed = parse_rule(rule) if rule is not None else None
        if sequence is not None:
            values, source = read_sequence(sequence), str(sequence)
        elif parsed is not None and target != VerifyTarget.SERIAL_ORACLE:
            values, source = list(grundy(parsed, n).values), parsed.label
        else:
            values, source = [], parsed.label if parsed is not None else "serial"
        report = VerifyReport(target=target, source=source, checks=tuple(run_checks(target, values, parsed)))

    fmt = resolve_format(fmt)
    if fmt == OutputFormat.JSON:
        emit(report.model_dump_json())
    else:
        rows = [
            (check.name, check.verdict.status, check.verdict.window, check.verdict.witness, check.verdict.detail)
            for check in report.checks
        ]
        emit(render_rows(("check", "status", "window", "witness", "detail"), rows, fmt, title=f"{target} {source}"))
    if not report.ok:
        raise typer.Exit(EXIT_FAIL)
