"""Последовательности Гранди для Maximum, Minimum и Serial Nim."""

__version__ = "0.1.0"
