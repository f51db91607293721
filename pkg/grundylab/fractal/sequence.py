"""Оператор Λ, свойства F2/F3, сужение и перенумерация."""

__all__ = [
    "lambda_op",
    "f2_violation",
    "check_fractal",
    "first_instance_positions",
    "restrict",
    "relabel",
    "ValueSet",
]

from collections.abc import Callable, Collection, Sequence

from grundylab.models import FractalVerdict, GrundyPrefix, Verdict, values_of

type ValueSet = Collection[int] | Callable[[int], bool]
"""Множество значений M: конечная коллекция или предикат для бесконечных M."""


def lambda_op(prefix: GrundyPrefix | Sequence[int]) -> list[int]:
    """Удаляет первое вхождение каждого значения.

    Длина результата равна N − D, где D равно числу различных значений. Удаление
    первых вхождений устойчиво к продлению префикса, поэтому результат точен.
    """
    seen: set[int] = set()
    result: list[int] = []
    for value in values_of(prefix):
        if value in seen:
            result.append(value)
        else:
            seen.add(value)
    return result


def f2_violation(values: Sequence[int]) -> int | None:
    """Индекс первого нарушения F2 на префиксе или None.

    На префиксе F2 означает: g₀ = 0 и каждое новое значение на единицу больше
    текущего максимума.
    """
    top = -1
    for n, value in enumerate(values):
        if value > top + 1:
            return n
        top = max(top, value)
    return None


def first_instance_positions(prefix: GrundyPrefix | Sequence[int]) -> dict[int, int]:
    """Возвращает {значение: позиция первого вхождения}."""
    positions: dict[int, int] = {}
    for n, value in enumerate(values_of(prefix)):
        positions.setdefault(value, n)
    return positions


def check_fractal(prefix: GrundyPrefix | Sequence[int]) -> FractalVerdict:
    """Проверяет F2 и F3 на окне. Бесконечность вхождений из префикса не решается."""
    values = values_of(prefix)
    window = len(values)

    witness = f2_violation(values)
    if witness is None:
        f2 = Verdict.passed(window)
    else:
        expected = max(values[:witness], default=-1) + 1
        f2 = Verdict.failed(
            window,
            f"value {values[witness]} appears before the first instance of {expected}",
            witness=witness,
        )

    reduced = lambda_op(values)
    mismatch = next((n for n, v in enumerate(reduced) if v != values[n]), None)
    if mismatch is None:
        f3 = Verdict.passed(window, detail=f"Λ agrees on {len(reduced)} terms")
    else:
        f3 = Verdict.failed(
            window,
            f"Λ(g)[{mismatch}] = {reduced[mismatch]} but g[{mismatch}] = {values[mismatch]}",
            witness=mismatch,
        )
    return FractalVerdict(f2=f2, f3=f3, window=window)


def _membership(values: ValueSet) -> Callable[[int], bool]:
    if callable(values):
        return values
    members = frozenset(values)
    return members.__contains__


def restrict(prefix: GrundyPrefix | Sequence[int], values: ValueSet) -> list[int]:
    """Подпоследовательность из членов, лежащих в M, с сохранением порядка."""
    contains = _membership(values)
    return [v for v in values_of(prefix) if contains(v)]


def relabel(prefix: GrundyPrefix | Sequence[int], values: ValueSet) -> list[int]:
    """Сужает префикс на M и заменяет i-й по величине элемент M на i."""
    contains = _membership(values)
    restricted = [v for v in values_of(prefix) if contains(v)]
    if not restricted:
        return []

    # rank[v] = #{u in M : u < v}
    rank: dict[int, int] = {}
    count = 0
    for u in range(max(restricted) + 1):
        if contains(u):
            rank[u] = count
            count += 1
    return [rank[v] for v in restricted]
