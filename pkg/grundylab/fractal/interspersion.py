"""Интерсперсии: проверка по сужениям на пары значений и по аксиоме I4 массива."""

__all__ = [
    "associated_array",
    "check_interspersion_prefix",
    "check_interspersion_array",
    "check_restriction_periodicity",
]

from bisect import bisect_left, bisect_right
from collections.abc import Collection, Sequence

from grundylab.exceptions import GrundyLabError, WindowTooShortError
from grundylab.models import AssociatedArray, GrundyPrefix, Verdict, values_of

from .sequence import restrict


def associated_array(prefix: GrundyPrefix | Sequence[int]) -> AssociatedArray:
    """Строит A(g): строка i: позиции вхождений i по возрастанию."""
    values = values_of(prefix)
    rows: list[list[int]] = [[] for _ in range(max(values, default=-1) + 1)]
    for n, value in enumerate(values):
        rows[value].append(n)
    return AssociatedArray(rows=tuple(map(tuple, rows)), window=len(values))


def _pair_violation(low: Sequence[int], high: Sequence[int]) -> int | None:
    """Позиция первого нарушения вида i…i j i j … для пары i < j (low: вхождения i)."""
    if not high:
        return None
    if not low or low[0] > high[0]:
        return high[0]

    for t in range(len(high) - 1):
        first = bisect_right(low, high[t])
        between = bisect_left(low, high[t + 1]) - first
        if between == 0:
            return high[t + 1]
        if between > 1:
            return low[first + 1]

    first = bisect_right(low, high[-1])
    if len(low) - first > 1:
        return low[first + 1]
    return None


def check_interspersion_prefix(prefix: GrundyPrefix | Sequence[int]) -> Verdict:
    """Для всех встречающихся в префиксе i < j сужение на {i, j} имеет вид i, …, i, j, i, j, …

    Нарушение точно; отсутствие нарушений означает «проходит на окне».
    Свидетель: наименьшая позиция нарушения, pair: пара значений.
    """
    array = associated_array(prefix)
    rows = array.rows
    best: tuple[int, int, int] | None = None

    for high, high_row in enumerate(rows):
        # violations of a pair never precede the first instance of its larger value
        if not high_row or (best is not None and best[0] <= high_row[0]):
            continue
        for low in range(high):
            if not rows[low]:
                continue
            position = _pair_violation(rows[low], high_row)
            if position is not None and (best is None or position < best[0]):
                best = (position, low, high)

    if best is None:
        return Verdict.passed(array.window)
    position, low, high = best
    return Verdict.failed(
        array.window,
        f"instances of {low} and {high} do not alternate at position {position}",
        witness=position,
        pair=(low, high),
    )


def _lt(a: int | None, b: int | None) -> bool | None:
    """Сравнение с учетом того, что None: элемент за окном (≥ window)."""
    if a is None and b is None:
        return None
    if a is None:
        return False
    if b is None:
        return True
    return a < b


def _at(row: Sequence[int], j: int) -> int | None:
    return row[j] if 0 <= j < len(row) else None


def _i4_violation(outer: Sequence[int], inner: Sequence[int]) -> int | None:
    """Проверяет I4 для a_{ij} из outer и a_{kl} из inner.

    a_{ij} < a_{kl} < a_{i,j+1}  ⇒  a_{i,j+1} < a_{k,l+1} < a_{i,j+2}.
    """
    # each inner entry fixes j: the last outer entry before it
    for l, entry in enumerate(inner):
        j = bisect_left(outer, entry) - 1
        if j < 0:
            continue
        nxt_outer, nxt_inner, far_outer = _at(outer, j + 1), _at(inner, l + 1), _at(outer, j + 2)
        if _lt(nxt_outer, nxt_inner) is False:
            return entry
        if _lt(nxt_inner, far_outer) is False:
            return entry
    return None


def _i4_gap_violation(outer: Sequence[int], inner: Sequence[int]) -> int | None:
    """То же условие, но перебор по промежуткам outer: берется первый inner после a_{ij}."""
    for j, entry in enumerate(outer):
        l = bisect_right(inner, entry)
        if l >= len(inner):
            break
        nxt_outer = _at(outer, j + 1)
        if _lt(inner[l], nxt_outer) is False:
            continue
        nxt_inner, far_outer = _at(inner, l + 1), _at(outer, j + 2)
        if _lt(nxt_outer, nxt_inner) is False:
            return inner[l]
        if _lt(nxt_inner, far_outer) is False:
            return inner[l]
    return None


def check_interspersion_array(array: AssociatedArray) -> Verdict:
    """Проверяет возрастание строк и столбцов и аксиому I4 на окне массива.

    Элемент за концом строки считается позицией ≥ window: сравнение такого
    элемента с существующим определено, двух таких: нет.
    """
    rows = array.rows
    window = array.window

    for i, row in enumerate(rows):
        if any(a >= b for a, b in zip(row, row[1:], strict=False)):
            return Verdict.failed(window, f"row {i} is not increasing", pair=(i,))

    for high, high_row in enumerate(rows):
        if not high_row:
            continue
        for low in range(high):
            low_row = rows[low]
            if not low_row:
                continue
            for c, entry in enumerate(high_row):
                if _lt(_at(low_row, c), entry) is False:
                    return Verdict.failed(
                        window,
                        f"column {c} decreases between rows {low} and {high}",
                        witness=entry,
                        pair=(low, high),
                    )
            # rows play both roles in I4; iterate over the shorter one
            short, long = (high_row, low_row) if len(high_row) <= len(low_row) else (low_row, high_row)
            position = _i4_violation(long, short)
            if position is None:
                position = _i4_gap_violation(short, long)
            if position is not None:
                return Verdict.failed(
                    window,
                    f"I4 fails for rows {low} and {high}",
                    witness=position,
                    pair=(low, high),
                )
    return Verdict.passed(window)


def check_restriction_periodicity(
    prefix: GrundyPrefix | Sequence[int], values: Collection[int]
) -> tuple[int, int]:
    """Находит наименьший предпериод, после которого g|M периодична с периодом #M.

    Предполагается, что префикс является интерсперсией на своем окне.

    :return: (предпериод, период) в индексах последовательности g|M.
    :raises WindowTooShortError: Окно не показывает двух полных периодов.
    """
    members = set(values)
    if not members:
        raise GrundyLabError("M must be nonempty")
    restricted = restrict(prefix, members)
    missing = members - set(restricted)
    if missing:
        raise WindowTooShortError(
            f"values {sorted(missing)} never occur within the window", witness=min(missing)
        )

    period = len(members)
    preperiod = 0
    for n in range(len(restricted) - period - 1, -1, -1):
        if restricted[n] != restricted[n + period]:
            preperiod = n + 1
            break

    if len(restricted) - preperiod < 2 * period:
        raise WindowTooShortError(
            f"restriction has {len(restricted)} terms, too few to exhibit period {period} "
            f"after preperiod {preperiod}",
            witness=len(restricted),
        )
    return preperiod, period
