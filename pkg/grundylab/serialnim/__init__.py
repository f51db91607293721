"""Serial Nim и Smallest Nim."""

__all__ = [
    "bracket",
    "serial_grundy",
    "serial_grundy_oracle",
    "serial_winning_move",
    "smallest_nim_grundy",
    "serial_table",
    "serial_row",
    "check_serial_maxnim_equivalence",
    "check_serial_closed_form",
]

from .equivalence import check_serial_closed_form, check_serial_maxnim_equivalence, serial_row
from .serial import (
    bracket,
    serial_grundy,
    serial_grundy_oracle,
    serial_table,
    serial_winning_move,
    smallest_nim_grundy,
)
