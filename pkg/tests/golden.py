"""Эталонные значения из опубликованных таблиц."""

HALF_G = [0, 0, 0, 1, 0, 2, 1, 3, 0, 4, 2, 5, 1, 6, 3, 7, 0, 8, 4, 9, 2, 10]
"""g₀ … g₂₁ для правила half (сдвиг на единицу относительно записи с n = 1)."""

SQRT_G = [0, 1, 0, 1, 2, 0, 1, 2, 0, 3, 1, 2, 0, 3, 1, 2, 4]
POW2_REGULAR = [0, 0, 1, 1, 2, 3, 3, 3, 4, 5, 6, 7, 7, 7, 7, 7, 8]
POW2_G = [0, 0, 1, 0, 2, 3, 1, 0, 4, 5, 6, 7, 2, 3, 1, 0, 8]
HALF_H = [0, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 5]


HALF_TRIANGLE = [
    [2, 3, 3, 4, 4, 4, 4, 5, 5, 5],
    [1, 2, 2, 2, 3, 3, 3, 3, 3],
    [1, 1, 2, 2, 2, 2, 2, 3],
    [1, 1, 1, 2, 2, 2, 2],
    [1, 1, 1, 1, 2, 2],
    [1, 1, 1, 1, 1],
    [1, 1, 1, 1],
    [1, 1, 1],
    [1, 1],
    [1],
]
"""Строки s_{i,i+1} … s_{i,10} треугольника правила half (значения 0 … 10)."""

HALF_OFFSET_ROWS = {
    0: (0, [0, 1, 2, 4, 8, 16, 32]),
    1: (2, [3, 6, 12, 24, 48]),
    2: (3, [5, 10, 20, 40]),
    3: (3, [7, 14, 28, 56]),
    4: (4, [9, 18, 36]),
}
"""Строки A′ правила half при семи столбцах: значение → (s₀ᵢ, элементы)."""
