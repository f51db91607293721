__all__ = ["first_instances", "canonical_rule", "prefix_with_values"]

from collections.abc import Sequence
from itertools import accumulate

from grundylab.exceptions import FractalViolationError, GrundyLabError, InsufficientHorizonError
from grundylab.fractal.sequence import f2_violation, first_instance_positions
from grundylab.models import GrundyPrefix, RuleSequence, values_of

from .grundy import grundy


def first_instances(prefix: GrundyPrefix | Sequence[int]) -> list[int]:
    """Возвращает ĝ(0), ĝ(1), … до первого значения, которого нет в префиксе."""
    positions = first_instance_positions(prefix)
    result: list[int] = []
    while len(result) in positions:
        result.append(positions[len(result)])
    return result


def canonical_rule(prefix: GrundyPrefix | Sequence[int]) -> RuleSequence:
    """Регулярное правило f(n) = max{g_m : m ≤ n}, порождающее данный фрактальный префикс.

    :raises GrundyLabError: Префикс пуст.
    :raises FractalViolationError: Префикс нарушает F2 (witness: индекс).
    """
    values = values_of(prefix)
    if not values:
        raise GrundyLabError("cannot build a rule from an empty prefix")
    witness = f2_violation(values)
    if witness is not None:
        raise FractalViolationError(f"prefix violates F2 at index {witness}", witness=witness)
    return RuleSequence.from_table(list(accumulate(values, max)))


def prefix_with_values(rule: RuleSequence, count: int, initial: int = 64) -> GrundyPrefix:
    """Кратчайший префикс, содержащий значения 0, …, count − 1.

    Окно удваивается, пока не встретятся все первые вхождения.

    :raises InsufficientHorizonError: На горизонте правила значений меньше count.
    """
    window = min(initial, rule.horizon + 1)
    while True:
        prefix = grundy(rule, window)
        firsts = first_instances(prefix)
        if len(firsts) >= count:
            return grundy(rule, firsts[count - 1] + 1) if count else grundy(rule, 1)
        if window > rule.horizon:
            raise InsufficientHorizonError(
                f"only {len(firsts)} distinct values of {rule.label} occur within its horizon",
                witness=count,
            )
        window = min(2 * window, rule.horizon + 1)
