__all__ = ["RuleSequence"]

from typing import Self

from pydantic import BaseModel, model_validator

from grundylab.config import UINT64_MAX, config
from grundylab.schemas import RuleKind


class RuleSequence(BaseModel):
    """Последовательность-правило f, заданная на конечном горизонте [0, horizon].

    Для всех n на горизонте выполняется 0 ≤ f(n) ≤ n, в частности f(0) = 0.
    """

    model_config = {"frozen": True}

    kind: RuleKind
    """Вид правила."""

    table: tuple[int, ...] | None = None
    """Явные значения f(0..N−1), только для kind=TABLE."""

    heaps: tuple[int, ...] | None = None
    """Размеры кучек a₁,…,a_k, только для kind=SERIAL."""

    horizon: int
    """Наибольший n, для которого определено f(n)."""

    @model_validator(mode="after")
    def _check_invariants(self) -> Self:
        if self.horizon < 0:
            raise ValueError("horizon must be a natural number")
        if self.horizon > UINT64_MAX:
            raise ValueError(f"horizon {self.horizon} exceeds 64-bit range")

        if self.kind == RuleKind.TABLE:
            if not self.table:
                raise ValueError("table rule needs at least one entry")
            if self.heaps is not None:
                raise ValueError("table rule takes no heaps")
            if self.horizon != len(self.table) - 1:
                raise ValueError("table horizon must equal len(table) - 1")
            for n, value in enumerate(self.table):
                if not 0 <= value <= n:
                    raise ValueError(f"f({n}) = {value} violates 0 <= f(n) <= n")
        elif self.kind == RuleKind.SERIAL:
            if not self.heaps:
                raise ValueError("serial rule needs at least one heap")
            if self.table is not None:
                raise ValueError("serial rule takes no table")
            if any(a < 1 for a in self.heaps):
                raise ValueError("serial heap sizes must be positive")
            if self.horizon != sum(self.heaps):
                raise ValueError("serial horizon must equal the total heap size")
        elif self.table is not None or self.heaps is not None:
            raise ValueError(f"preset rule {self.kind} takes neither table nor heaps")
        return self

    @classmethod
    def preset(cls, kind: RuleKind, horizon: int | None = None) -> "RuleSequence":
        """Создает предустановленное правило (half, sqrt, pow2)."""
        if kind in (RuleKind.TABLE, RuleKind.SERIAL):
            raise ValueError(f"{kind} is not a preset")
        return cls(kind=kind, horizon=config.horizon if horizon is None else horizon)

    @classmethod
    def half(cls, horizon: int | None = None) -> "RuleSequence":
        return cls.preset(RuleKind.HALF, horizon)

    @classmethod
    def sqrt(cls, horizon: int | None = None) -> "RuleSequence":
        return cls.preset(RuleKind.SQRT, horizon)

    @classmethod
    def pow2(cls, horizon: int | None = None) -> "RuleSequence":
        return cls.preset(RuleKind.POW2, horizon)

    @classmethod
    def from_table(cls, values: list[int] | tuple[int, ...]) -> "RuleSequence":
        """Создает табличное правило, горизонт равен len(values) − 1."""
        return cls(kind=RuleKind.TABLE, table=tuple(values), horizon=len(values) - 1)

    @classmethod
    def serial(cls, heaps: list[int] | tuple[int, ...]) -> "RuleSequence":
        """Создает правило 1,2,…,a₁,1,2,…,a₂,… с горизонтом Σaᵢ."""
        return cls(kind=RuleKind.SERIAL, heaps=tuple(heaps), horizon=sum(heaps))

    @property
    def label(self) -> str:
        """Короткое текстовое представление в грамматике CLI."""
        if self.kind == RuleKind.SERIAL and self.heaps:
            return f"serial:{','.join(map(str, self.heaps))}"
        if self.kind == RuleKind.TABLE and self.table:
            return f"table[{len(self.table)}]"
        return str(self.kind)
