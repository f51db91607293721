"""Maximum Nim: оракул, линейный алгоритм, явные формулы, канонические правила."""

__all__ = [
    "naive_grundy",
    "fast_grundy",
    "fast_values",
    "grundy",
    "closed_half",
    "closed_pow2",
    "closed_prefix",
    "first_instances",
    "canonical_rule",
    "prefix_with_values",
    "sum_position_move",
]

from .closed import closed_half, closed_pow2, closed_prefix
from .grundy import fast_grundy, fast_values, grundy, naive_grundy
from .play import sum_position_move
from .structure import canonical_rule, first_instances, prefix_with_values
