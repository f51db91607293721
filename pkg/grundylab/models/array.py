__all__ = ["AssociatedArray", "OffsetArray", "OffsetRow"]

from typing import Self

from pydantic import BaseModel, model_validator


class AssociatedArray(BaseModel):
    """Массив A(g): строка i: позиции вхождений значения i в префиксе длины window."""

    model_config = {"frozen": True}

    rows: tuple[tuple[int, ...], ...]
    window: int

    @model_validator(mode="after")
    def _check_rows(self) -> Self:
        for i, row in enumerate(self.rows):
            if any(a >= b for a, b in zip(row, row[1:], strict=False)):
                raise ValueError(f"row {i} is not strictly increasing")
            if row and not (0 <= row[0] and row[-1] < self.window):
                raise ValueError(f"row {i} leaves the window [0, {self.window})")
        return self

    def at(self, i: int, j: int) -> int | None:
        """Элемент a_{ij} или None, если он лежит за окном."""
        row = self.rows[i] if i < len(self.rows) else ()
        return row[j] if j < len(row) else None


class OffsetRow(BaseModel):
    """Строка массива A′: значение i, смещение s₀ᵢ и элементы a′_{i,s₀ᵢ}, …"""

    model_config = {"frozen": True}

    value: int
    offset: int
    entries: tuple[int, ...]


class OffsetArray(BaseModel):
    """Массив A′, обратный к n ↦ (gₙ, hₙ), со смещениями строк."""

    model_config = {"frozen": True}

    rule: str
    rows: tuple[OffsetRow, ...]

    def left_justified(self) -> tuple[tuple[int, ...], ...]:
        """Строки A′, сдвинутые влево на s₀ᵢ, то есть массив A."""
        return tuple(row.entries for row in self.rows)
