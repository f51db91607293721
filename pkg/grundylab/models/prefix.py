__all__ = ["GrundyPrefix", "PairTable", "values_of"]

from collections.abc import Sequence
from typing import Self

from pydantic import BaseModel, model_validator

from grundylab.schemas import GameKind, Method

from .rule import RuleSequence


class GrundyPrefix(BaseModel):
    """Конечный префикс (g₀,…,g_{N−1}) последовательности Гранди с происхождением."""

    model_config = {"frozen": True}

    values: tuple[int, ...]
    """Значения последовательности, индексация с нуля."""

    rule: RuleSequence | None = None
    """Правило, по которому посчитан префикс (None для восстановленных из треугольника)."""

    game: GameKind = GameKind.MAXIMUM
    """Вариант игры."""

    method: Method
    """Способ вычисления."""

    jumps: tuple[int, ...] | None = None
    """Позиции первых вхождений ĥ(0), ĥ(1), … (для Minimum Nim)."""

    @model_validator(mode="after")
    def _check_invariants(self) -> Self:
        if self.values and self.values[0] != 0:
            raise ValueError("a Grundy prefix starts with g0 = 0")
        if self.game == GameKind.MINIMUM:
            # Minimum Nim prefixes are regular step sequences
            for n in range(1, len(self.values)):
                if not 0 <= self.values[n] - self.values[n - 1] <= 1:
                    raise ValueError(f"minimum prefix is not regular at n={n}")
        return self

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]


class PairTable(BaseModel):
    """Таблица троек (n, gₙ, hₙ); отображение n ↦ (gₙ, hₙ) инъективно."""

    model_config = {"frozen": True}

    entries: tuple[tuple[int, int, int], ...]
    rule: RuleSequence

    @model_validator(mode="after")
    def _check_injective(self) -> Self:
        seen: dict[tuple[int, int], int] = {}
        for n, g, h in self.entries:
            if (g, h) in seen:
                raise ValueError(f"pair {(g, h)} repeats at n={seen[(g, h)]} and n={n}")
            seen[(g, h)] = n
        return self

    def lookup(self, i: int, j: int) -> int | None:
        """Возвращает n с (gₙ, hₙ) = (i, j) или None."""
        for n, g, h in self.entries:
            if g == i and h == j:
                return n
        return None


def values_of(prefix: "GrundyPrefix | Sequence[int]") -> list[int]:
    """Приводит префикс любого вида к списку значений."""
    if isinstance(prefix, GrundyPrefix):
        return list(prefix.values)
    return list(prefix)
