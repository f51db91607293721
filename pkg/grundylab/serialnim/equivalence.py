"""Связь Serial Nim с Maximum Nim и сверка явной формулы с оракулом."""

__all__ = ["serial_row", "check_serial_maxnim_equivalence", "check_serial_closed_form"]

from bisect import bisect_left
from collections.abc import Sequence
from itertools import accumulate, product

from grundylab.exceptions import SerialPositionError
from grundylab.maxnim import naive_grundy
from grundylab.models import RuleSequence, Verdict

from .serial import serial_grundy, serial_grundy_oracle


def serial_row(heaps: Sequence[int], n: int) -> list[int]:
    """Ряд [n − S_k, a_k, …, a₁], где S_k = a₁ + … + a_k и S_k < n ≤ S_{k+1}.

    :raises SerialPositionError: n вне отрезка [0, Σaᵢ].
    """
    sums = [0, *accumulate(heaps)]
    if not 0 <= n <= sums[-1]:
        raise SerialPositionError(f"n = {n} lies outside [0, {sums[-1]}]", witness=n)
    if n == 0:
        return []
    k = bisect_left(sums, n) - 1
    return [n - sums[k], *reversed(heaps[:k])]


def check_serial_maxnim_equivalence(heaps: Sequence[int], n: int) -> Verdict:
    """Сравнивает gₙ для Maximum Nim с правилом Serial(heaps) и значение ряда serial_row."""
    row = serial_row(heaps, n)
    max_value = naive_grundy(RuleSequence.serial(heaps), n + 1)[n]
    serial_value = serial_grundy_oracle(row)
    if max_value == serial_value:
        return Verdict.passed(n + 1)
    return Verdict.failed(
        n + 1,
        f"Maximum Nim gives {max_value}, serial row {row} gives {serial_value}",
        witness=n,
    )


def check_serial_closed_form(max_heaps: int = 4, max_size: int = 6) -> Verdict:
    """Перебирает все ряды длины ≤ max_heaps с кучками 1..max_size."""
    checked = 0
    for k in range(1, max_heaps + 1):
        for heaps in product(range(1, max_size + 1), repeat=k):
            checked += 1
            closed, oracle = serial_grundy(heaps), serial_grundy_oracle(heaps)
            if closed != oracle:
                return Verdict.failed(
                    checked,
                    f"{list(heaps)}: closed form {closed}, game tree {oracle}",
                    pair=heaps,
                )
    return Verdict.passed(checked, detail=f"{checked} positions agree")
