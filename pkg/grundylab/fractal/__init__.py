"""Фрактальные последовательности, интерсперсии и субаддитивные треугольники."""

__all__ = [
    "ValueSet",
    "lambda_op",
    "f2_violation",
    "check_fractal",
    "first_instance_positions",
    "restrict",
    "relabel",
    "associated_array",
    "check_interspersion_prefix",
    "check_interspersion_array",
    "check_restriction_periodicity",
    "triangle_of",
    "column_sums",
    "validate_triangle",
    "triangle_epsilon",
    "from_column_sums",
    "sequence_from_triangle",
]

from .interspersion import (
    associated_array,
    check_interspersion_array,
    check_interspersion_prefix,
    check_restriction_periodicity,
)
from .sequence import (
    ValueSet,
    check_fractal,
    f2_violation,
    first_instance_positions,
    lambda_op,
    relabel,
    restrict,
)
from .triangle import (
    column_sums,
    from_column_sums,
    sequence_from_triangle,
    triangle_epsilon,
    triangle_of,
    validate_triangle,
)
