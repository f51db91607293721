"""Командная строка grundylab."""

__all__ = ["app"]

from . import arrays, bench, sequences, serial, triangle, verify  # noqa: F401  (register commands)
from .common import app
