from collections.abc import Callable
from functools import reduce
from itertools import accumulate
from operator import xor

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grundylab.core import rule_values
from grundylab.exceptions import (
    FractalViolationError,
    GrundyLabError,
    InsufficientHorizonError,
    NotWeaklyIncreasingError,
)
from grundylab.maxnim import (
    canonical_rule,
    closed_half,
    closed_pow2,
    closed_prefix,
    fast_grundy,
    first_instances,
    grundy,
    naive_grundy,
    prefix_with_values,
    sum_position_move,
)
from grundylab.models import RuleSequence
from grundylab.schemas import Method

from .golden import HALF_G, POW2_G, SQRT_G
from .strategies import regular_rules, weakly_increasing_tables


@st.composite
def any_tables(draw: st.DrawFn, max_size: int = 60) -> list[int]:
    """Произвольные таблицы с 0 ≤ f(n) ≤ n, в том числе убывающие."""
    size = draw(st.integers(1, max_size))
    return [draw(st.integers(0, n)) for n in range(size)]


def test_half_prefix(half: RuleSequence) -> None:
    assert list(naive_grundy(half, 22).values) == HALF_G
    assert list(fast_grundy(half, 22).values) == HALF_G
    assert list(closed_prefix(half, 22).values) == HALF_G


def test_sqrt_prefix(sqrt: RuleSequence) -> None:
    assert list(naive_grundy(sqrt, 17).values) == SQRT_G
    assert list(fast_grundy(sqrt, 17).values) == SQRT_G


def test_pow2_prefix(pow2: RuleSequence) -> None:
    assert list(naive_grundy(pow2, 17).values) == POW2_G
    assert list(fast_grundy(pow2, 17).values) == POW2_G
    assert list(closed_prefix(pow2, 17).values) == POW2_G


def test_empty_and_single_prefix(half: RuleSequence) -> None:
    assert naive_grundy(half, 0).values == ()
    assert fast_grundy(half, 0).values == ()
    assert closed_prefix(half, 1).values == (0,)


def test_prefix_methods(half: RuleSequence) -> None:
    assert naive_grundy(half, 5).method == Method.NAIVE
    assert fast_grundy(half, 5).method == Method.FAST
    assert closed_prefix(half, 5).method == Method.CLOSED


def test_closed_forms_match_fast(half: RuleSequence, pow2: RuleSequence) -> None:
    n = 2**16
    assert closed_prefix(half, n).values == fast_grundy(half, n).values
    assert closed_prefix(pow2, n).values == fast_grundy(pow2, n).values


def test_closed_forms_on_large_indices() -> None:
    # 2^40 + 2^3: drop the trailing zeros and the last one
    assert closed_half((1 << 40) + 8) == 1 << 36
    assert closed_pow2((1 << 20) - 1) == 0


def test_closed_forms_reject_zero() -> None:
    with pytest.raises(GrundyLabError):
        closed_half(0)
    with pytest.raises(GrundyLabError):
        closed_pow2(0)


def test_closed_prefix_needs_a_formula(sqrt: RuleSequence) -> None:
    with pytest.raises(GrundyLabError):
        closed_prefix(sqrt, 10)


def test_decreasing_rule_falls_back_to_recurrence() -> None:
    rule = RuleSequence.from_table([0, 1, 2, 1, 4, 1])
    with pytest.raises(NotWeaklyIncreasingError) as e:
        fast_grundy(rule, 6)
    assert e.value.witness == 3
    assert grundy(rule, 6) == naive_grundy(rule, 6)


@settings(max_examples=200)
@given(weakly_increasing_tables())
def test_fast_matches_naive(table: list[int]) -> None:
    rule = RuleSequence.from_table(table)
    assert fast_grundy(rule, len(table)).values == naive_grundy(rule, len(table)).values


@given(any_tables())
def test_grundy_on_any_rule(table: list[int]) -> None:
    rule = RuleSequence.from_table(table)
    assert grundy(rule, len(table)).values == naive_grundy(rule, len(table)).values


def test_first_instances() -> None:
    assert first_instances(HALF_G) == [0, 3, *range(5, 22, 2)]
    assert first_instances(SQRT_G) == [0, 1, 4, 9, 16]
    # 2 is missing, so 3 is not reported either
    assert first_instances([0, 1, 3]) == [0, 1]


def test_canonical_rule_regenerates_prefix() -> None:
    for golden in (HALF_G, SQRT_G, POW2_G):
        rule = canonical_rule(golden)
        assert list(rule.table or ()) == list(accumulate(golden, max))
        assert list(fast_grundy(rule, len(golden)).values) == golden


def test_canonical_rule_rejects_f2_violation() -> None:
    with pytest.raises(FractalViolationError) as e:
        canonical_rule([0, 2, 1])
    assert e.value.witness == 1


def test_canonical_rule_rejects_empty_prefix() -> None:
    with pytest.raises(GrundyLabError):
        canonical_rule([])


def test_prefix_with_values(half: RuleSequence) -> None:
    prefix = prefix_with_values(half, 5)
    assert len(prefix) == 10
    assert max(prefix.values) == 4

    with pytest.raises(InsufficientHorizonError):
        prefix_with_values(RuleSequence.half(10), 20)


def test_sum_position_move() -> None:
    rule = RuleSequence.half(64)
    assert sum_position_move([3, 5], rule) == (1, 3)
    assert sum_position_move([3, 3], rule) is None
    assert sum_position_move([], rule) is None


@given(st.lists(st.integers(0, 60), min_size=1, max_size=5))
def test_sum_position_move_reaches_zero(heaps: list[int]) -> None:
    rule = RuleSequence.half(64)
    values = fast_grundy(rule, 61).values
    total = reduce(xor, (values[m] for m in heaps), 0)
    move = sum_position_move(heaps, rule)
    if total == 0:
        assert move is None
        return
    assert move is not None
    index, size = move
    assert 1 <= heaps[index] - size <= (heaps[index] - 1) // 2
    after = [*heaps[:index], size, *heaps[index + 1 :]]
    assert reduce(xor, (values[m] for m in after), 0) == 0


@pytest.mark.parametrize("make", [RuleSequence.half, RuleSequence.sqrt, RuleSequence.pow2])
def test_fast_matches_naive_on_presets(make: Callable[[int], RuleSequence]) -> None:
    rule = make(4096)
    assert fast_grundy(rule, 4096).values == naive_grundy(rule, 4096).values


def _assert_windows_distinct(rule: RuleSequence, n_terms: int) -> None:
    g = fast_grundy(rule, n_terms).values
    f = rule_values(rule, n_terms - 1)
    for n in range(n_terms):
        window = g[n - f[n] : n + 1]
        assert len(set(window)) == f[n] + 1, n


@pytest.mark.parametrize("make", [RuleSequence.half, RuleSequence.sqrt])
def test_move_windows_hold_distinct_values(make: Callable[[int], RuleSequence]) -> None:
    _assert_windows_distinct(make(4096), 4096)


@settings(max_examples=100)
@given(regular_rules(max_size=200))
def test_move_windows_distinct_for_regular_rules(rule: RuleSequence) -> None:
    _assert_windows_distinct(rule, rule.horizon + 1)
