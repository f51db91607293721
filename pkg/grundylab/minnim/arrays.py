"""Массивы A′ (со смещениями строк) и A (выровненный влево)."""

__all__ = ["build_arrays", "render_offset_array", "offset_array_json"]

from grundylab.config import logger
from grundylab.exceptions import InsufficientHorizonError
from grundylab.fractal import associated_array
from grundylab.maxnim import first_instances, grundy
from grundylab.models import OffsetArray, OffsetRow, RuleSequence

from .grundy import fast_min_grundy

_INITIAL_WINDOW = 64


def build_arrays(
    rule: RuleSequence, rows: int, cols: int
) -> tuple[OffsetArray, tuple[tuple[int, ...], ...]]:
    """Строит A′ и A для rows значений и столбцов 0..cols−1.

    a′_{ij}: единственное n с (gₙ, hₙ) = (i, j), определено при j ≥ s₀ᵢ.
    Строка i массива A: позиции вхождений i по порядку, то есть строка A′,
    сдвинутая влево на s₀ᵢ. Окно удваивается, пока не станет достаточным.

    :raises InsufficientHorizonError: Горизонта правила не хватает на форму rows × cols.
    """
    window = min(_INITIAL_WINDOW, rule.horizon + 1)
    while True:
        g = grundy(rule, window)
        h = fast_min_grundy(rule, window)
        firsts = first_instances(g)
        if len(firsts) >= rows and h[window - 1] >= cols:
            break
        if window > rule.horizon:
            raise InsufficientHorizonError(
                f"horizon {rule.horizon} of {rule.label} is too short for a {rows}x{cols} array",
                witness=(rows, cols),
            )
        window = min(2 * window, rule.horizon + 1)
    logger.debug(f"arrays {rows}x{cols} for {rule.label} use a window of {window}")

    positions = associated_array(g).rows
    offset_rows = tuple(
        OffsetRow(
            value=i,
            offset=h[firsts[i]],
            entries=tuple(n for n in positions[i] if h[n] < cols),
        )
        for i in range(rows)
    )
    array = OffsetArray(rule=rule.label, rows=offset_rows)
    return array, array.left_justified()


def render_offset_array(array: OffsetArray, cols: int | None = None) -> str:
    """Текст A′ с выровненными столбцами; левый нижний угол остается пустым."""
    if cols is None:
        cols = max((row.offset + len(row.entries) for row in array.rows), default=0)
    width = max((len(str(n)) for row in array.rows for n in row.entries), default=1)
    lines = []
    for row in array.rows:
        cells = [" " * width] * row.offset + [str(n).rjust(width) for n in row.entries]
        lines.append(" ".join(cells[:cols]).rstrip())
    return "\n".join(lines)


def offset_array_json(array: OffsetArray) -> str:
    """JSON вида {rule, rows: [{value, offset, entries}]}."""
    return array.model_dump_json(indent=2)
