"""Биекция n ↦ (gₙ, hₙ) между позициями и парам значений Maximum/Minimum Nim."""

__all__ = [
    "pair_encode",
    "pair_decode",
    "closed_pair_decode_half",
    "pair_table",
    "check_pair_bijection",
    "row_offset",
]

from bisect import bisect_left

from grundylab.config import UINT64_MAX, logger
from grundylab.core import check_window, eval_rule, is_regular
from grundylab.exceptions import (
    GrundyLabError,
    NaturalOverflowError,
    NotRegularError,
    PairNotFoundError,
    PairOutOfRangeError,
)
from grundylab.maxnim import first_instances, grundy
from grundylab.models import GrundyPrefix, PairTable, RuleSequence, Verdict

from .grundy import _q_search, fast_min_grundy, min_from_max


def pair_encode(rule: RuleSequence, n: int) -> tuple[int, int]:
    """Возвращает (gₙ, hₙ)."""
    check_window(rule, n)
    g = grundy(rule, n + 1)
    h = fast_min_grundy(rule, n + 1)
    return g[n], h[n]


def row_offset(g: GrundyPrefix, h: GrundyPrefix, i: int) -> int | None:
    """s₀ᵢ = h в позиции ĝ(i), то есть число нулей g в (0, ĝ(i)].

    :return: Смещение строки i или None, если ĝ(i) за окном.
    """
    firsts = first_instances(g)
    if i >= len(firsts):
        return None
    return h[firsts[i]]


def _decode_scan(rule: RuleSequence, i: int, j: int, search_bound: int) -> int:
    g = grundy(rule, search_bound + 1)
    h = min_from_max(g)
    offset = row_offset(g, h, i)
    if offset is None:
        raise PairNotFoundError(
            f"value {i} does not occur in g within n <= {search_bound}", witness=(i, j)
        )
    if j < offset:
        raise PairOutOfRangeError(f"pair ({i}, {j}) needs j >= s0{i} = {offset}", witness=(i, j))
    for n in range(search_bound + 1):
        if g[n] == i and h[n] == j:
            return n
    raise PairNotFoundError(f"pair ({i}, {j}) lies beyond n = {search_bound}", witness=(i, j))


def _decode_chain(rule: RuleSequence, i: int, j: int, search_bound: int) -> int:
    """Ускоренный путь: a′_{i,s₀ᵢ} = ĝ(i), далее a′_{i,j+1} = q(a′_{ij})."""
    # for regular f the first instance of i > 0 is the least n with f(n) >= i
    start = 0 if i == 0 else bisect_left(range(rule.horizon + 1), i, key=lambda n: eval_rule(rule, n))
    if start > min(search_bound, rule.horizon):
        raise PairNotFoundError(
            f"value {i} does not occur in g within n <= {search_bound}", witness=(i, j)
        )

    # zeros of g after position 0 form the chain q(0), q(q(0)), ...
    offset = 0
    zero = 0
    while (zero := _q_search(rule, zero)) <= start:
        offset += 1
    if j < offset:
        raise PairOutOfRangeError(f"pair ({i}, {j}) needs j >= s0{i} = {offset}", witness=(i, j))

    n = start
    for _ in range(j - offset):
        n = _q_search(rule, n)
        if n > search_bound:
            raise PairNotFoundError(
                f"pair ({i}, {j}) lies beyond n = {search_bound}", witness=(i, j)
            )
    return n


def pair_decode(
    rule: RuleSequence, i: int, j: int, search_bound: int, *, accelerated: bool = False
) -> int:
    """Находит единственное n ≤ search_bound с (gₙ, hₙ) = (i, j).

    По умолчанию просматривает вычисленный префикс. С accelerated=True идет по
    цепочке q от ĝ(i), не вычисляя префикс целиком.

    :raises PairOutOfRangeError: j < s₀ᵢ.
    :raises PairNotFoundError: Искомое n больше search_bound.
    :raises NotRegularError: Правило нерегулярно.
    """
    if i < 0 or j < 0:
        raise GrundyLabError(f"pair ({i}, {j}) must consist of naturals")
    bound = min(search_bound, rule.horizon)
    verdict = is_regular(rule, bound)
    if not verdict.ok:
        raise NotRegularError(f"rule {rule.label} is not regular", witness=verdict.witness)

    if accelerated:
        n = _decode_chain(rule, i, j, bound)
    else:
        n = _decode_scan(rule, i, j, bound)
    logger.debug(f"pair ({i}, {j}) of {rule.label} decoded to n={n}")
    return n


def closed_pair_decode_half(i: int, j: int) -> int:
    """Правило Half: к двоичной записи i дописываются единица и j − len(i) − 1 нулей.

    :raises PairOutOfRangeError: j ≤ len(i) (кроме пары (0, 0)).
    """
    if i < 0 or j < 0:
        raise GrundyLabError(f"pair ({i}, {j}) must consist of naturals")
    if i == 0 and j == 0:
        return 0
    width = i.bit_length()
    if j <= width:
        raise PairOutOfRangeError(f"pair ({i}, {j}) needs j >= {width + 1}", witness=(i, j))
    n = ((i << 1) | 1) << (j - width - 1)
    if n > UINT64_MAX:
        raise NaturalOverflowError(f"pair ({i}, {j}) decodes beyond the 64-bit range", witness=(i, j))
    return n


def pair_table(rule: RuleSequence, n_terms: int) -> PairTable:
    """Все тройки (n, gₙ, hₙ) при n < n_terms."""
    g = grundy(rule, n_terms)
    h = fast_min_grundy(rule, n_terms)
    entries = tuple(zip(range(n_terms), g.values, h.values, strict=True))
    return PairTable(entries=entries, rule=rule)


def check_pair_bijection(rule: RuleSequence, n_terms: int) -> Verdict:
    """Проверяет инъективность n ↦ (gₙ, hₙ) и сюръективность на окне.

    Каждая пара (i, j) с ĝ(i) < N и s₀ᵢ ≤ j < h_{N−1} обязана встретиться.
    """
    g = grundy(rule, n_terms)
    h = fast_min_grundy(rule, n_terms)

    seen: dict[tuple[int, int], int] = {}
    for n in range(n_terms):
        pair = (g[n], h[n])
        if pair in seen:
            return Verdict.failed(
                n_terms, f"pair {pair} occurs at n={seen[pair]} and n={n}", witness=n, pair=pair
            )
        seen[pair] = n

    if n_terms == 0:
        return Verdict.passed(0)
    top = h[n_terms - 1]
    for i, first in enumerate(first_instances(g)):
        for j in range(h[first], top):
            if (i, j) not in seen:
                return Verdict.failed(
                    n_terms, f"pair ({i}, {j}) never occurs in the window", pair=(i, j)
                )
    return Verdict.passed(n_terms, detail=f"{len(seen)} distinct pairs")
