__all__ = ["read_rule_table", "read_sequence", "read_triangle", "write_text"]

from pathlib import Path

from pydantic import TypeAdapter, ValidationError

from grundylab.config import logger
from grundylab.exceptions import GrundyLabError, RuleTableError, TriangleError
from grundylab.models import RuleSequence, SubadditiveTriangle

_INT_LIST = TypeAdapter(list[int])


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise GrundyLabError(f"cannot read {path}: {e.strerror}", witness=str(path)) from e
    except UnicodeDecodeError as e:
        raise GrundyLabError(f"{path}: not UTF-8 text (byte {e.start})", witness=e.start) from e


def _parse_lines(path: Path, text: str, error: type[GrundyLabError]) -> list[tuple[int, int]]:
    """Одно неотрицательное десятичное число на строку, строки с # пропускаются.

    :return: Пары (номер строки, значение).
    """
    values: list[tuple[int, int]] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not (stripped.isascii() and stripped.isdecimal()):
            raise error(f"{path}:{line_no}: expected a natural number, got {line!r}", witness=line_no)
        values.append((line_no, int(stripped)))
    return values


def read_rule_table(path: Path) -> RuleSequence:
    """Читает табличное правило: строка n (без учета комментариев) содержит f(n).

    :raises RuleTableError: Строка не число или нарушено 0 ≤ f(n) ≤ n (witness: номер строки).
    """
    text = _read(path)
    entries = _parse_lines(path, text, RuleTableError)
    if not entries:
        raise RuleTableError(f"{path}: rule table is empty")

    for n, (line_no, value) in enumerate(entries):
        if value > n:
            raise RuleTableError(
                f"{path}:{line_no}: f({n}) = {value} violates 0 <= f(n) <= n", witness=line_no
            )
    values = [value for _, value in entries]
    logger.debug(f"read a rule table of {len(values)} entries from {path}")
    return RuleSequence.from_table(values)


def read_sequence(path: Path) -> list[int]:
    """Читает последовательность: JSON-массив или одно число на строку."""
    text = _read(path)
    if text.lstrip().startswith("["):
        try:
            values = _INT_LIST.validate_json(text)
        except ValidationError as e:
            raise GrundyLabError(f"{path}: not a JSON array of integers", witness=str(path)) from e
        if any(v < 0 for v in values):
            raise GrundyLabError(f"{path}: sequence terms must be natural numbers")
        return values
    return [value for _, value in _parse_lines(path, text, GrundyLabError)]


def read_triangle(path: Path) -> SubadditiveTriangle:
    """Читает треугольник в JSON вида {"dim": D, "rows": [[…], …]}."""
    try:
        return SubadditiveTriangle.model_validate_json(_read(path))
    except ValidationError as e:
        raise TriangleError(f"{path}: invalid triangle: {e.errors()[0]['msg']}") from e


def write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    logger.debug(f"wrote {path}")
