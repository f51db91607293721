"""Точка входа: python -m grundylab."""

from .cli import app

app(prog_name="grundylab")
