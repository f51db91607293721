__all__ = ["SubadditiveTriangle"]

from typing import Self

from pydantic import BaseModel, model_validator


class SubadditiveTriangle(BaseModel):
    """Строго верхнетреугольная таблица s_{ij}, 0 ≤ i < j < dim.

    Строка i хранится как rows[i] = [s_{i,i+1}, …, s_{i,dim−1}]. Субаддитивность
    здесь не проверяется: для этого есть validate_triangle.
    """

    model_config = {"frozen": True}

    dim: int
    rows: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_shape(self) -> Self:
        if self.dim < 1:
            raise ValueError("triangle dimension must be positive")
        if len(self.rows) != self.dim:
            raise ValueError(f"expected {self.dim} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if len(row) != self.dim - 1 - i:
                raise ValueError(f"row {i} must have {self.dim - 1 - i} entries")
            if any(value < 0 for value in row):
                raise ValueError(f"row {i} has a negative entry")
        return self

    def s(self, i: int, j: int) -> int:
        """Элемент s_{ij} при i < j."""
        if not 0 <= i < j < self.dim:
            raise IndexError(f"s({i}, {j}) outside 0 <= i < j < {self.dim}")
        return self.rows[i][j - i - 1]

    @classmethod
    def from_entries(cls, dim: int, entries: dict[tuple[int, int], int]) -> "SubadditiveTriangle":
        """Собирает треугольник из словаря {(i, j): s_{ij}}."""
        rows = tuple(tuple(entries[(i, j)] for j in range(i + 1, dim)) for i in range(dim))
        return cls(dim=dim, rows=rows)
