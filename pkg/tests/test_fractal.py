from collections.abc import Callable

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grundylab.exceptions import (
    FractalViolationError,
    GrundyLabError,
    InsufficientHorizonError,
    NotRealizableError,
    TriangleError,
    WindowTooShortError,
)
from grundylab.fractal import (
    associated_array,
    check_fractal,
    check_interspersion_array,
    check_interspersion_prefix,
    check_restriction_periodicity,
    column_sums,
    f2_violation,
    first_instance_positions,
    from_column_sums,
    lambda_op,
    relabel,
    restrict,
    sequence_from_triangle,
    triangle_epsilon,
    triangle_of,
    validate_triangle,
)
from grundylab.maxnim import canonical_rule, fast_grundy, naive_grundy, prefix_with_values
from grundylab.models import AssociatedArray, RuleSequence, SubadditiveTriangle
from grundylab.schemas import Method, Status

from .golden import HALF_G, HALF_TRIANGLE, POW2_G, SQRT_G
from .strategies import f2_sequences, regular_rules


@pytest.fixture
def half_triangle() -> SubadditiveTriangle:
    return SubadditiveTriangle(dim=11, rows=(*map(tuple, HALF_TRIANGLE), ()))


def test_lambda_op() -> None:
    assert lambda_op(HALF_G) == HALF_G[:11]
    assert lambda_op([0, 1, 0, 2, 1]) == [0, 1]
    assert lambda_op([]) == []


@pytest.mark.parametrize("golden", [HALF_G, SQRT_G, POW2_G])
def test_golden_prefixes_are_fractal(golden: list[int]) -> None:
    verdict = check_fractal(golden)
    assert verdict.ok
    assert verdict.infinitive == Status.UNDETERMINED
    assert verdict.window == len(golden)


def test_check_fractal_failures() -> None:
    verdict = check_fractal([0, 2, 1])
    assert verdict.f2.status == Status.FAIL
    assert verdict.f2.witness == 1

    verdict = check_fractal([0, 1, 1])
    assert verdict.f2.ok
    assert verdict.f3.witness == 0
    assert not verdict


def test_f2_violation() -> None:
    assert f2_violation(HALF_G) is None
    assert f2_violation([1]) == 0
    assert f2_violation([0, 0, 1, 3]) == 3


@settings(max_examples=50, deadline=None)
@given(regular_rules(max_size=300))
def test_grundy_prefixes_are_fractal_interspersions(rule: RuleSequence) -> None:
    prefix = fast_grundy(rule, rule.horizon + 1)
    assert check_fractal(prefix).ok
    assert check_interspersion_prefix(prefix).ok
    assert check_interspersion_array(associated_array(prefix)).ok


def test_first_instance_positions() -> None:
    assert first_instance_positions(SQRT_G) == {0: 0, 1: 1, 2: 4, 3: 9, 4: 16}


def test_restrict_and_relabel() -> None:
    values = [0, 1, 2, 1, 3, 2]
    assert restrict(values, {1, 3}) == [1, 1, 3]
    assert relabel(values, {1, 3}) == [0, 0, 1]
    assert relabel(values, lambda v: v % 2 == 0) == [0, 1, 1]
    assert relabel(values, set()) == []


def test_restriction_periodicity(sqrt: RuleSequence) -> None:
    prefix = fast_grundy(sqrt, 200)
    assert check_restriction_periodicity(prefix, {0, 1, 2}) == (2, 3)


def test_restriction_periodicity_on_half(half: RuleSequence) -> None:
    prefix = fast_grundy(half, 200)
    # restriction to {0, 1} is 0, 0, 0, 1, 0, 1, 0, 1, …
    assert check_restriction_periodicity(prefix, {0, 1}) == (2, 2)
    assert check_restriction_periodicity(prefix, {0}) == (0, 1)
    assert check_restriction_periodicity(prefix, {3}) == (0, 1)


def test_restriction_periodicity_errors(sqrt: RuleSequence) -> None:
    with pytest.raises(WindowTooShortError):
        check_restriction_periodicity(SQRT_G, {0, 7})
    with pytest.raises(WindowTooShortError):
        check_restriction_periodicity(fast_grundy(sqrt, 6), {0, 1, 2})
    with pytest.raises(GrundyLabError):
        check_restriction_periodicity(SQRT_G, set())


def test_associated_array() -> None:
    array = associated_array(HALF_G)
    assert array.window == 22
    assert array.rows[1] == (3, 6, 12)
    assert array.at(1, 2) == 12
    assert array.at(1, 5) is None
    assert array.at(40, 0) is None


def test_interspersion_violation() -> None:
    verdict = check_interspersion_prefix([0, 1, 1, 0])
    assert verdict.status == Status.FAIL
    assert verdict.witness == 2
    assert verdict.pair == (0, 1)


def test_interspersion_array_violation() -> None:
    array = AssociatedArray(rows=((0, 1, 2), (3, 4)), window=5)
    verdict = check_interspersion_array(array)
    assert not verdict.ok
    assert verdict.pair == (0, 1)


def test_absent_values_form_no_pair() -> None:
    for values in ([0, 2, 0, 2], [0, 0, 3, 0, 3]):
        assert check_interspersion_prefix(values).ok
        assert check_interspersion_array(associated_array(values)).ok


def test_pair_of_present_values_still_fails_with_gap() -> None:
    verdict = check_interspersion_prefix([0, 2, 2])
    assert verdict.witness == 2
    assert verdict.pair == (0, 2)
    assert check_interspersion_array(associated_array([0, 2, 2])).pair == (0, 2)


@settings(max_examples=500)
@given(st.lists(st.integers(0, 3), max_size=8))
def test_prefix_and_array_checks_agree(values: list[int]) -> None:
    assert check_interspersion_prefix(values).ok == check_interspersion_array(associated_array(values)).ok


@settings(max_examples=300)
@given(f2_sequences())
def test_fractal_iff_regenerated_by_canonical_rule(values: list[int]) -> None:
    regenerated = list(naive_grundy(canonical_rule(values), len(values)).values)
    assert check_fractal(values).ok == (regenerated == values)


@pytest.mark.parametrize("make", [RuleSequence.half, RuleSequence.sqrt])
@pytest.mark.parametrize(
    "members",
    [lambda v: v % 2 == 0, lambda v: v >= 1],
    ids=["evens", "positive"],
)
def test_relabeled_restrictions_are_interspersions(
    make: Callable[[int], RuleSequence], members: Callable[[int], bool]
) -> None:
    prefix = fast_grundy(make(600), 601)
    relabeled = relabel(restrict(prefix, members), members)
    assert relabeled
    assert check_interspersion_prefix(relabeled).ok
    assert check_interspersion_array(associated_array(relabeled)).ok


def test_half_triangle(half: RuleSequence, half_triangle: SubadditiveTriangle) -> None:
    triangle = triangle_of(prefix_with_values(half, 11))
    assert triangle == half_triangle
    assert column_sums(triangle) == [2 * j for j in range(1, 11)]
    assert validate_triangle(triangle).ok


def test_sqrt_triangle() -> None:
    triangle = triangle_of(SQRT_G)
    assert triangle.dim == 5
    assert (triangle.s(0, 1), triangle.s(0, 2), triangle.s(1, 2)) == (0, 1, 2)
    assert triangle_epsilon(triangle, 0, 1, 2) == 1


def test_triangle_of_rejects_non_fractal() -> None:
    with pytest.raises(FractalViolationError):
        triangle_of([0, 2, 1])


def test_validate_triangle_subadditivity() -> None:
    triangle = SubadditiveTriangle.from_entries(3, {(0, 1): 0, (0, 2): 5, (1, 2): 0})
    verdict = validate_triangle(triangle)
    assert verdict.status == Status.FAIL
    assert verdict.pair == (0, 1, 2)


def test_validate_triangle_column_sums() -> None:
    triangle = SubadditiveTriangle.from_entries(3, {(0, 1): 2, (0, 2): 2, (1, 2): 0})
    verdict = validate_triangle(triangle)
    assert verdict.status == Status.FAIL
    assert verdict.witness == 2


def test_from_column_sums(half_triangle: SubadditiveTriangle) -> None:
    assert from_column_sums([2, 4]).rows == ((2, 3), (1,), ())
    assert from_column_sums(column_sums(half_triangle)) == half_triangle
    assert from_column_sums([]).dim == 1


def test_from_column_sums_rejects() -> None:
    with pytest.raises(NotRealizableError) as e:
        from_column_sums([2, 2])
    assert e.value.witness == 2
    with pytest.raises(NotRealizableError):
        from_column_sums([5, 3])


def test_sequence_from_triangle(half_triangle: SubadditiveTriangle) -> None:
    prefix = sequence_from_triangle(half_triangle)
    assert list(prefix.values) == HALF_G
    assert prefix.method == Method.FROM_TRIANGLE
    assert list(sequence_from_triangle(half_triangle, 10).values) == HALF_G[:10]

    with pytest.raises(InsufficientHorizonError):
        sequence_from_triangle(half_triangle, 30)


def test_sequence_from_invalid_triangle() -> None:
    triangle = SubadditiveTriangle.from_entries(3, {(0, 1): 0, (0, 2): 5, (1, 2): 0})
    with pytest.raises(TriangleError):
        sequence_from_triangle(triangle)


@settings(max_examples=50, deadline=None)
@given(regular_rules(max_size=120))
def test_triangle_round_trip(rule: RuleSequence) -> None:
    values = list(fast_grundy(rule, rule.horizon + 1).values)
    triangle = triangle_of(values)
    assert validate_triangle(triangle).ok

    rebuilt = sequence_from_triangle(triangle)
    assert list(rebuilt.values) == values[: len(rebuilt)]
    assert from_column_sums(column_sums(triangle)) == triangle


@pytest.mark.parametrize("make", [RuleSequence.half, RuleSequence.sqrt, RuleSequence.pow2])
def test_lambda_fixes_presets(make: Callable[[int], RuleSequence]) -> None:
    values = list(fast_grundy(make(2**14), 2**14).values)
    reduced = lambda_op(values)
    assert reduced == values[: len(reduced)]
