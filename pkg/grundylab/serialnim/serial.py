"""Serial Nim: ходить можно только в самую левую непустую кучку."""

__all__ = [
    "bracket",
    "serial_grundy",
    "serial_grundy_oracle",
    "serial_winning_move",
    "smallest_nim_grundy",
    "serial_table",
]

from collections.abc import Iterable, Sequence

from grundylab.config import config, logger
from grundylab.exceptions import SerialPositionError, SerialSizeLimitError
from grundylab.models import SerialPosition


def _heaps_of(position: SerialPosition | Sequence[int]) -> tuple[int, ...]:
    if isinstance(position, SerialPosition):
        return position.heaps
    return tuple(position)


def bracket(a: int, b: int) -> int:
    """[a, b] для двух кучек: b при a = 0, a − 1 при 0 < a ≤ b, иначе a."""
    if a < 0 or b < 0:
        raise SerialPositionError(f"heap sizes must be natural, got [{a}, {b}]")
    if a == 0:
        return b
    return a - 1 if a <= b else a


def serial_grundy(position: SerialPosition | Sequence[int]) -> int:
    """Значение [a₁, …, a_k] в явном виде.

    m = min{j : a_j ≠ a₁} с нулем a_{k+1} в конце. Ответ a₁ − 1, если m нечетно
    и a_m < a₁ или m четно и a_m > a₁; иначе a₁.

    :raises SerialPositionError: Ряд пуст или содержит пустую кучку.
    """
    heaps = _heaps_of(position)
    if not heaps:
        raise SerialPositionError("a serial position needs at least one heap")
    if any(a <= 0 for a in heaps):
        raise SerialPositionError(f"heap sizes must be positive, got {list(heaps)}", witness=heaps)

    first = heaps[0]
    # the trailing zero always differs from a₁ > 0
    m, other = next((j, a) for j, a in enumerate((*heaps, 0), start=1) if a != first)
    if (m % 2 == 1 and other < first) or (m % 2 == 0 and other > first):
        return first - 1
    return first


def _bracket_column(b: int, limit: int) -> list[int]:
    """([a, b])_{a < limit} по определению: [0, b] = b, [a, b] = mex{[i, b] : i < a}."""
    column: list[int] = []
    seen: set[int] = set()
    current = 0
    for a in range(limit):
        value = b if a == 0 else current
        column.append(value)
        seen.add(value)
        while current in seen:
            current += 1
    return column


def serial_grundy_oracle(position: SerialPosition | Sequence[int]) -> int:
    """Значение по дереву игры: свертка справа налево b ← [a_j, b].

    Пустые кучки пропускаются, пустой ряд стоит 0.

    :raises SerialSizeLimitError: Суммарное число камней больше GRUNDYLAB_SERIAL_LIMIT.
    """
    heaps = _heaps_of(position)
    if any(a < 0 for a in heaps):
        raise SerialPositionError(f"heap sizes must be natural, got {list(heaps)}", witness=heaps)
    total = sum(heaps)
    if total > config.limits.serial_limit:
        raise SerialSizeLimitError(
            f"position has {total} stones, the oracle limit is {config.limits.serial_limit}",
            witness=total,
        )

    value = 0
    for a in reversed(heaps):
        value = _bracket_column(value, a + 1)[a]
    return value


def serial_winning_move(position: SerialPosition | Sequence[int]) -> int | None:
    """Наибольшее i < a₁, после уменьшения a₁ до i значение которого равно 0.

    :return: Новый размер левой кучки или None, если значение позиции уже 0.
    """
    heaps = _heaps_of(position)
    if serial_grundy(heaps) == 0:
        return None
    rest = heaps[1:]
    for i in range(heaps[0] - 1, -1, -1):
        after = (i, *rest) if i else rest
        if not after or serial_grundy(after) == 0:
            logger.debug(f"winning move in {list(heaps)}: {heaps[0]} -> {i}")
            return i
    raise AssertionError(f"no move reaches value 0 from {list(heaps)}")


def smallest_nim_grundy(heaps: Iterable[int]) -> int:
    """Smallest Nim: кучки упорядочиваются по возрастанию, дальше как Serial Nim."""
    ordered = sorted(heaps)
    if not ordered:
        raise SerialPositionError("Smallest Nim needs at least one heap")
    return serial_grundy(ordered)


def serial_table(heaps: Sequence[int], limit: int) -> list[int]:
    """([a, a₁, …, a_k])_{a < limit} по оракулу."""
    return _bracket_column(serial_grundy_oracle(heaps), limit)
