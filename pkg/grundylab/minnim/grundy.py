"""Последовательности Гранди для Minimum Nim и функция q."""

__all__ = [
    "naive_min_grundy",
    "q_of",
    "fast_min_grundy",
    "min_from_max",
    "closed_min_half",
]

import time
from bisect import bisect_right
from itertools import accumulate

from grundylab.config import UINT64_MAX, logger
from grundylab.core import check_window, eval_rule, first_irregular, is_regular, rule_values
from grundylab.exceptions import GrundyLabError, NaturalOverflowError, NotRegularError, QUndefinedError
from grundylab.models import GrundyPrefix, RuleSequence
from grundylab.schemas import GameKind, Method


def naive_min_grundy(rule: RuleSequence, n_terms: int) -> GrundyPrefix:
    """Считает hₙ = mex{hᵢ : 0 ≤ i ≤ n − f(n) − 1} по рекурренте.

    Из кучки размера m разрешено взять строго больше f(m) камней. Mex по
    растущему префиксу поддерживается инкрементально: pm[k] = mex{h₀, …, h_{k−1}}.

    :raises NotRegularError: Правило дает нерегулярную h (такие правила не поддерживаются).
    """
    if n_terms <= 0:
        return GrundyPrefix(values=(), rule=rule, game=GameKind.MINIMUM, method=Method.NAIVE)
    check_window(rule, n_terms - 1)

    f = rule_values(rule, n_terms - 1)
    values: list[int] = []
    prefix_mex = [0]
    seen: set[int] = set()
    current = 0
    for n in range(n_terms):
        value = prefix_mex[n - f[n]]
        values.append(value)
        seen.add(value)
        while current in seen:
            current += 1
        prefix_mex.append(current)

    witness = first_irregular(values)
    if witness is not None:
        raise NotRegularError(
            f"rule {rule.label} yields an irregular Minimum Nim sequence at n={witness}",
            witness=witness,
        )
    return GrundyPrefix(values=tuple(values), rule=rule, game=GameKind.MINIMUM, method=Method.NAIVE)


def _q_search(rule: RuleSequence, k: int) -> int:
    """Бинарный поиск наименьшего j ≤ horizon с j − f(j) > k (без проверок регулярности)."""
    return bisect_right(range(rule.horizon + 1), k, key=lambda j: j - eval_rule(rule, j))


def q_of(rule: RuleSequence, k: int) -> int:
    """q(k) = min{j : j − f(j) > k}.

    Для регулярного f величина j − f(j) не убывает, поэтому подходит бинарный
    поиск. Регулярность проверяется на отрезке [0, q(k)].

    :raises QUndefinedError: Такого j нет на горизонте.
    :raises NotRegularError: Правило нерегулярно до найденного j.
    """
    if k < 0:
        raise GrundyLabError(f"q is defined on naturals, got {k}")
    j = _q_search(rule, k)
    if j > rule.horizon:
        raise QUndefinedError(
            f"no j <= {rule.horizon} with j - f(j) > {k} for rule {rule.label}", witness=k
        )

    verdict = is_regular(rule, j)
    if not verdict.ok:
        raise NotRegularError(f"rule {rule.label} is not regular", witness=verdict.witness)
    return j


def fast_min_grundy(rule: RuleSequence, n_terms: int) -> GrundyPrefix:
    """Строит h по скачкам ĥ(0) = 0, ĥ(t) = q(ĥ(t−1)).

    h: регулярная ступенчатая последовательность: hₙ = t при ĥ(t) ≤ n < ĥ(t+1).
    Скачки за окном не нужны, поэтому q ищется только внутри окна.

    :raises NotRegularError: Правило нерегулярно на окне.
    """
    if n_terms <= 0:
        return GrundyPrefix(values=(), rule=rule, game=GameKind.MINIMUM, method=Method.FAST, jumps=())
    check_window(rule, n_terms - 1)

    start = time.perf_counter()
    f = rule_values(rule, n_terms - 1)
    witness = first_irregular(f)
    if witness is not None:
        raise NotRegularError(f"rule {rule.label} is not regular", witness=witness)

    jumps = [0]
    j = 0
    while True:
        # j - f(j) is nondecreasing, so the search for q continues from the last jump
        while j < n_terms and j - f[j] <= jumps[-1]:
            j += 1
        if j >= n_terms:
            break
        jumps.append(j)

    values = [0] * n_terms
    for t, (lo, hi) in enumerate(zip(jumps, [*jumps[1:], n_terms], strict=True)):
        values[lo:hi] = [t] * (hi - lo)
    logger.trace(
        f"fast_min_grundy {rule.label} n={n_terms} took {time.perf_counter() - start:.3f} s"
    )
    return GrundyPrefix(
        values=tuple(values),
        rule=rule,
        game=GameKind.MINIMUM,
        method=Method.FAST,
        jumps=tuple(jumps),
    )


def min_from_max(max_prefix: GrundyPrefix) -> GrundyPrefix:
    """hₙ = #{0 < k ≤ n : g_k = 0}: Minimum Nim по нулям Maximum Nim."""
    zeros = [n for n, value in enumerate(max_prefix.values) if value == 0 and n > 0]
    values = list(accumulate(int(value == 0 and n > 0) for n, value in enumerate(max_prefix.values)))
    return GrundyPrefix(
        values=tuple(values),
        rule=max_prefix.rule,
        game=GameKind.MINIMUM,
        method=max_prefix.method,
        jumps=(0, *zeros) if values else (),
    )


def closed_min_half(n: int) -> int:
    """Правило Half: hₙ: число двоичных разрядов n (h₀ = 0)."""
    if n < 0:
        raise GrundyLabError(f"n must be a natural number, got {n}")
    if n > UINT64_MAX:
        raise NaturalOverflowError(f"index {n} exceeds the 64-bit range", witness=n)
    return n.bit_length()
