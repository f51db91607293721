"""Последовательности Гранди для Maximum Nim: оракул и линейный алгоритм."""

__all__ = ["naive_grundy", "fast_grundy", "grundy", "fast_values"]

import time

from grundylab.config import logger
from grundylab.core import check_window, mex, regularize_values, rule_values
from grundylab.exceptions import NotWeaklyIncreasingError
from grundylab.models import GrundyPrefix, RuleSequence
from grundylab.schemas import GameKind, Method


def naive_grundy(rule: RuleSequence, n_terms: int) -> GrundyPrefix:
    """Считает gₙ = mex{g_{n−i}}, i = 1..f(n), напрямую по рекурренте.

    Работает для любого правила; стоимость порядка Σ f(i).

    :param rule: Правило f.
    :param n_terms: Длина префикса.
    :return: Префикс g₀, …, g_{n_terms−1}.
    """
    if n_terms <= 0:
        return GrundyPrefix(values=(), rule=rule, method=Method.NAIVE)
    check_window(rule, n_terms - 1)

    f = rule_values(rule, n_terms - 1)
    values = [0] * n_terms
    for n in range(1, n_terms):
        values[n] = mex(values[n - f[n] : n])
    return GrundyPrefix(values=tuple(values), rule=rule, method=Method.NAIVE)


def fast_values(f: list[int]) -> list[int]:
    """Линейное заполнение по регулярному правилу f.

    gₙ = f(n), если f(n) > f(n−1), иначе gₙ = g_{n−f(n)−1}.
    """
    values = [0] * len(f)
    for n in range(1, len(f)):
        if f[n] > f[n - 1]:
            values[n] = f[n]
        else:
            values[n] = values[n - f[n] - 1]
    return values


def fast_grundy(rule: RuleSequence, n_terms: int) -> GrundyPrefix:
    """Считает префикс за O(n) для неубывающего правила.

    Правило предварительно регуляризуется: последовательность Гранди при этом
    не меняется.

    :raises NotWeaklyIncreasingError: Правило убывает на окне (witness: индекс).
    """
    if n_terms <= 0:
        return GrundyPrefix(values=(), rule=rule, method=Method.FAST)
    check_window(rule, n_terms - 1)

    start = time.perf_counter()
    regular = regularize_values(rule_values(rule, n_terms - 1))
    values = fast_values(regular)
    logger.trace(
        f"fast_grundy {rule.label} n={n_terms} took {time.perf_counter() - start:.3f} s"
    )
    return GrundyPrefix(
        values=tuple(values), rule=rule, game=GameKind.MAXIMUM, method=Method.FAST
    )


def grundy(rule: RuleSequence, n_terms: int) -> GrundyPrefix:
    """Быстрый путь для неубывающих правил, оракул для остальных."""
    try:
        return fast_grundy(rule, n_terms)
    except NotWeaklyIncreasingError as e:
        logger.debug(f"{rule.label} decreases at n={e.witness}, falling back to the recurrence")
        return naive_grundy(rule, n_terms)
