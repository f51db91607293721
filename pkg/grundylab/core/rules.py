"""Вычисление правил f, проверки регулярности и регуляризация."""

__all__ = [
    "eval_rule",
    "rule_values",
    "is_regular",
    "is_weakly_increasing",
    "regularize",
    "regularize_values",
    "check_window",
    "first_irregular",
]

from bisect import bisect_left
from collections.abc import Sequence
from itertools import accumulate
from math import isqrt

from grundylab.config import UINT64_MAX
from grundylab.exceptions import HorizonError, NaturalOverflowError, NotWeaklyIncreasingError
from grundylab.models import RuleSequence, Verdict
from grundylab.schemas import RuleKind


def check_window(rule: RuleSequence, upto: int) -> None:
    """Проверяет, что индекс upto допустим для правила.

    :raises NaturalOverflowError: upto не помещается в 64 бита.
    :raises HorizonError: upto за горизонтом правила.
    """
    if upto > UINT64_MAX:
        raise NaturalOverflowError(f"index {upto} exceeds the 64-bit range", witness=upto)
    if upto < 0 or upto > rule.horizon:
        raise HorizonError(
            f"index {upto} outside the horizon [0, {rule.horizon}] of rule {rule.label}",
            witness=upto,
        )


def eval_rule(rule: RuleSequence, n: int) -> int:
    """Возвращает f(n), 0 ≤ f(n) ≤ n.

    :param rule: Правило.
    :param n: Размер кучки, 0 ≤ n ≤ horizon.
    :return: Наибольшее число камней, которое разрешено взять.
    """
    check_window(rule, n)
    match rule.kind:
        case RuleKind.HALF:
            return 0 if n == 0 else (n - 1) // 2
        case RuleKind.SQRT:
            return isqrt(n)
        case RuleKind.POW2:
            return 0 if n == 0 else (1 << (n.bit_length() - 1)) - 1
        case RuleKind.TABLE:
            assert rule.table is not None
            return rule.table[n]
        case RuleKind.SERIAL:
            assert rule.heaps is not None
            if n == 0:
                return 0
            bounds = list(accumulate(rule.heaps))
            block = bisect_left(bounds, n)
            return n - (bounds[block - 1] if block else 0)
    raise AssertionError(f"unknown rule kind {rule.kind}")


def rule_values(rule: RuleSequence, upto: int) -> list[int]:
    """Возвращает список f(0), …, f(upto) за один проход."""
    check_window(rule, upto)
    match rule.kind:
        case RuleKind.HALF:
            return [0, *((n - 1) >> 1 for n in range(1, upto + 1))]
        case RuleKind.SQRT:
            return list(map(isqrt, range(upto + 1)))
        case RuleKind.POW2:
            values = [0]
            power = 1
            while power <= upto:
                values.extend([power - 1] * (min(2 * power, upto + 1) - power))
                power *= 2
            return values
        case RuleKind.TABLE:
            assert rule.table is not None
            return list(rule.table[: upto + 1])
        case RuleKind.SERIAL:
            assert rule.heaps is not None
            values = [0]
            for a in rule.heaps:
                values.extend(range(1, a + 1))
            return values[: upto + 1]
    raise AssertionError(f"unknown rule kind {rule.kind}")


def first_irregular(values: Sequence[int]) -> int | None:
    """Наименьший n с нарушением 0 ≤ v(n) − v(n−1) ≤ 1 или None."""
    for n in range(1, len(values)):
        if not 0 <= values[n] - values[n - 1] <= 1:
            return n
    return None


def _first_decrease(values: list[int]) -> int | None:
    for n in range(1, len(values)):
        if values[n] < values[n - 1]:
            return n
    return None


def is_regular(rule: RuleSequence, upto: int) -> Verdict:
    """Проверяет 0 ≤ f(n) − f(n−1) ≤ 1 для 1 ≤ n ≤ upto.

    :return: Вердикт, точный на окне [0, upto]; witness: наименьший нарушающий n.
    """
    witness = first_irregular(rule_values(rule, upto))
    if witness is None:
        return Verdict.passed(window=upto + 1)
    return Verdict.failed(window=upto + 1, witness=witness, detail="rule is not regular")


def is_weakly_increasing(rule: RuleSequence, upto: int) -> Verdict:
    """Проверяет f(n−1) ≤ f(n) для 1 ≤ n ≤ upto."""
    witness = _first_decrease(rule_values(rule, upto))
    if witness is None:
        return Verdict.passed(window=upto + 1)
    return Verdict.failed(window=upto + 1, witness=witness, detail="rule decreases")


def regularize_values(values: list[int]) -> list[int]:
    """Регуляризует список значений неубывающего правила: f′(n) = min{f(n), 1 + f′(n−1)}.

    :raises NotWeaklyIncreasingError: Значения где-то убывают.
    """
    witness = _first_decrease(values)
    if witness is not None:
        raise NotWeaklyIncreasingError(
            f"rule is not weakly increasing: f({witness}) < f({witness - 1})", witness=witness
        )
    regular = [values[0]] if values else []
    for n in range(1, len(values)):
        regular.append(min(values[n], regular[-1] + 1))
    return regular


def regularize(rule: RuleSequence, upto: int) -> RuleSequence:
    """Возвращает табличное регулярное правило f′ на [0, upto] с той же последовательностью Гранди."""
    return RuleSequence.from_table(regularize_values(rule_values(rule, upto)))
