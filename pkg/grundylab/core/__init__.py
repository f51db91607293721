"""Базовые операции: mex, правила, регулярность."""

__all__ = [
    "mex",
    "eval_rule",
    "rule_values",
    "is_regular",
    "is_weakly_increasing",
    "regularize",
    "regularize_values",
    "check_window",
    "first_irregular",
]

from .mex import mex
from .rules import (
    check_window,
    eval_rule,
    first_irregular,
    is_regular,
    is_weakly_increasing,
    regularize,
    regularize_values,
    rule_values,
)
