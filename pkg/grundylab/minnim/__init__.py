"""Minimum Nim: рекуррента, функция q, связь с Maximum Nim и биекция пар."""

__all__ = [
    "naive_min_grundy",
    "q_of",
    "fast_min_grundy",
    "min_from_max",
    "closed_min_half",
    "pair_encode",
    "pair_decode",
    "closed_pair_decode_half",
    "pair_table",
    "check_pair_bijection",
    "row_offset",
    "build_arrays",
    "render_offset_array",
    "offset_array_json",
]

from .arrays import build_arrays, offset_array_json, render_offset_array
from .grundy import closed_min_half, fast_min_grundy, min_from_max, naive_min_grundy, q_of
from .pair import (
    check_pair_bijection,
    closed_pair_decode_half,
    pair_decode,
    pair_encode,
    pair_table,
    row_offset,
)
