"""Явные формулы для правил half и pow2."""

__all__ = ["closed_half", "closed_pow2", "closed_prefix"]

from grundylab.config import UINT64_MAX
from grundylab.core import check_window
from grundylab.exceptions import GrundyLabError, NaturalOverflowError
from grundylab.models import GrundyPrefix, RuleSequence
from grundylab.schemas import Method, RuleKind


def _check_positive(n: int) -> None:
    if n < 1:
        raise GrundyLabError(f"closed forms are defined for n >= 1, got {n}", witness=n)
    if n > UINT64_MAX:
        raise NaturalOverflowError(f"{n} exceeds the 64-bit range", witness=n)


def closed_half(n: int) -> int:
    """gₙ для f(n) = ⌊(n−1)/2⌋: отбрасываем младшие нули и последнюю единицу.

    n = 2^a + … + 2^y + 2^z  ↦  2^{a−z−1} + … + 2^{y−z−1}.
    """
    _check_positive(n)
    trailing_zeros = (n & -n).bit_length() - 1
    return n >> (trailing_zeros + 1)


def closed_pow2(n: int) -> int:
    """gₙ для f(n) = max{2^k ≤ n} − 1.

    n = (1 1^k 0 b₁…b_j)₂ ↦ (1 b₁…b_j)₂, а для n = 2^m − 1 значение 0.
    """
    _check_positive(n)
    width = n.bit_length() - 1
    rest = n ^ (1 << width)
    # highest zero bit of rest, counted inside width bits
    zeros = ((1 << width) - 1) ^ rest
    if zeros == 0:
        return 0
    tail_width = zeros.bit_length() - 1
    return (1 << tail_width) | (rest & ((1 << tail_width) - 1))


def closed_prefix(rule: RuleSequence, n_terms: int) -> GrundyPrefix:
    """Префикс g₀, …, g_{n_terms−1} по явной формуле (только half и pow2).

    :raises GrundyLabError: Для правила нет явной формулы.
    """
    match rule.kind:
        case RuleKind.HALF:
            formula = closed_half
        case RuleKind.POW2:
            formula = closed_pow2
        case _:
            raise GrundyLabError(f"no closed form for rule {rule.label}")
    if n_terms > 0:
        check_window(rule, n_terms - 1)
    values = (0, *map(formula, range(1, n_terms)))[:n_terms]
    return GrundyPrefix(values=values, rule=rule, method=Method.CLOSED)
