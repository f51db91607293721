__all__ = [
    "read_rule_table",
    "read_sequence",
    "read_triangle",
    "write_text",
    "render_rows",
    "render_sequence",
    "render_triangle",
]

from .files import read_rule_table, read_sequence, read_triangle, write_text
from .render import render_rows, render_sequence, render_triangle
