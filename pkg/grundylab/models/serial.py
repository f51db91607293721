__all__ = ["SerialPosition"]

from typing import Self

from pydantic import BaseModel, model_validator


class SerialPosition(BaseModel):
    """Ряд кучек a₁,…,a_k для Serial Nim, слева направо.

    Замыкающий нуль a_{k+1} = 0 подразумевается и никогда не хранится.
    """

    model_config = {"frozen": True}

    heaps: tuple[int, ...]

    @model_validator(mode="after")
    def _check_heaps(self) -> Self:
        if any(a < 0 for a in self.heaps):
            raise ValueError("heap sizes are natural numbers")
        return self

    @classmethod
    def of(cls, *heaps: int) -> "SerialPosition":
        return cls(heaps=heaps)

    def stripped(self) -> "SerialPosition":
        """Позиция без ведущих пустых кучек."""
        k = 0
        while k < len(self.heaps) and self.heaps[k] == 0:
            k += 1
        return SerialPosition(heaps=self.heaps[k:])

    @property
    def total(self) -> int:
        return sum(self.heaps)
