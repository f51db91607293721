"""Субаддитивные треугольники и биекция с фрактальными последовательностями."""

__all__ = [
    "triangle_of",
    "column_sums",
    "validate_triangle",
    "triangle_epsilon",
    "from_column_sums",
    "sequence_from_triangle",
]

from bisect import bisect_left
from collections.abc import Sequence

from grundylab.config import UINT64_MAX, logger
from grundylab.exceptions import (
    FractalViolationError,
    InsufficientHorizonError,
    NaturalOverflowError,
    NotRealizableError,
    TriangleError,
)
from grundylab.models import GrundyPrefix, SubadditiveTriangle, Verdict, values_of
from grundylab.schemas import Method

from .interspersion import associated_array
from .sequence import f2_violation


def triangle_of(prefix: GrundyPrefix | Sequence[int]) -> SubadditiveTriangle:
    """Строит треугольник s_{ij}: число вхождений i до первого вхождения j.

    Вхождение g₀ = 0 не считается. Размерность равна числу значений, первые
    вхождения которых попали в окно.

    :raises FractalViolationError: Префикс нарушает F2.
    """
    values = values_of(prefix)
    witness = f2_violation(values)
    if witness is not None:
        raise FractalViolationError(f"prefix violates F2 at index {witness}", witness=witness)

    rows = associated_array(values).rows
    firsts = [row[0] for row in rows]
    dim = len(firsts)
    entries = {
        (i, j): bisect_left(rows[i], firsts[j]) - (1 if i == 0 else 0)
        for i in range(dim)
        for j in range(i + 1, dim)
    }
    return SubadditiveTriangle.from_entries(dim, entries)


def column_sums(triangle: SubadditiveTriangle) -> list[int]:
    """Суммы столбцов c₁, …, c_{dim−1}."""
    return [sum(triangle.s(i, j) for i in range(j)) for j in range(1, triangle.dim)]


def triangle_epsilon(triangle: SubadditiveTriangle, i: int, j: int, k: int) -> int:
    """ε_{ijk} = s_{ij} + s_{jk} − s_{ik}.

    0: сужение на {i, j, k} идет циклом i, j, k; 1: циклом i, j, i, k, j, …
    """
    return triangle.s(i, j) + triangle.s(j, k) - triangle.s(i, k)


def validate_triangle(triangle: SubadditiveTriangle) -> Verdict:
    """Проверяет s_{ij} + s_{jk} − 1 ≤ s_{ik} ≤ s_{ij} + s_{jk} и строгий рост c_j."""
    dim = triangle.dim
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                if triangle_epsilon(triangle, i, j, k) not in (0, 1):
                    return Verdict.failed(
                        dim,
                        f"s({i},{k}) = {triangle.s(i, k)} breaks subadditivity with "
                        f"s({i},{j}) = {triangle.s(i, j)}, s({j},{k}) = {triangle.s(j, k)}",
                        pair=(i, j, k),
                    )

    sums = column_sums(triangle)
    for j in range(1, len(sums)):
        if sums[j] <= sums[j - 1]:
            return Verdict.failed(
                dim,
                f"column sums do not increase: c{j} = {sums[j - 1]}, c{j + 1} = {sums[j]}",
                witness=j + 1,
            )
    return Verdict.passed(dim)


def from_column_sums(sums: Sequence[int]) -> SubadditiveTriangle:
    """Восстанавливает треугольник по суммам столбцов c₁, c₂, … (c₀ = 0).

    s_{ij} = (c_j − c_i + Σ_{p=i+1}^{j−1} s_{ip} − ε) / j, где ε: единственное
    число из [−i, j−1−i], делающее дробь целой.

    :raises NotRealizableError: Вектор не является суммами столбцов субаддитивного треугольника.
    :raises NaturalOverflowError: Сумма не помещается в 64 бита.
    """
    c = [0, *sums]
    for j, value in enumerate(c):
        if value > UINT64_MAX:
            raise NaturalOverflowError(f"c{j} = {value} exceeds the 64-bit range", witness=j)
    for j in range(2, len(c)):
        if c[j] <= c[j - 1]:
            raise NotRealizableError(f"column sums must increase, c{j} <= c{j - 1}", witness=j)

    dim = len(c)
    entries: dict[tuple[int, int], int] = {}
    for i in range(dim):
        sigma = 0
        for j in range(i + 1, dim):
            base = c[j] - c[i] + sigma
            epsilon = -i + (base + i) % j
            value = (base - epsilon) // j
            if value < 0:
                raise NotRealizableError(
                    f"column sums force s({i},{j}) = {value} < 0", witness=(i, j)
                )
            entries[(i, j)] = value
            sigma += value

    triangle = SubadditiveTriangle.from_entries(dim, entries)
    verdict = validate_triangle(triangle)
    if not verdict.ok:
        raise NotRealizableError(f"reconstructed triangle is invalid: {verdict.detail}", verdict.pair)
    if column_sums(triangle) != list(sums):
        raise NotRealizableError("reconstructed triangle does not reproduce the column sums")
    return triangle


def sequence_from_triangle(
    triangle: SubadditiveTriangle, n_terms: int | None = None
) -> GrundyPrefix:
    """Восстанавливает фрактальный префикс по треугольнику.

    ĝ(0) = 0, ĝ(j) = 1 + c_j; gₙ = k при n = ĝ(k), иначе gₙ = g_{n−k−1},
    где ĝ(k) < n < ĝ(k+1). Определено окно из ĝ(dim−1) + 1 членов.

    :raises TriangleError: Треугольник не субаддитивен или c_j не растут.
    :raises InsufficientHorizonError: n_terms больше определенного окна.
    """
    verdict = validate_triangle(triangle)
    if not verdict.ok:
        raise TriangleError(verdict.detail, witness=verdict.pair or verdict.witness)

    firsts = [0, *(1 + c for c in column_sums(triangle))]
    window = firsts[-1] + 1
    if n_terms is None:
        n_terms = window
    if n_terms > window:
        raise InsufficientHorizonError(
            f"a triangle of dimension {triangle.dim} determines only {window} terms",
            witness=n_terms,
        )

    values: list[int] = []
    k = -1
    for n in range(n_terms):
        if k + 1 < len(firsts) and firsts[k + 1] == n:
            k += 1
            values.append(k)
        else:
            values.append(values[n - k - 1])
    logger.trace(f"reconstructed {n_terms} terms from a triangle of dimension {triangle.dim}")
    return GrundyPrefix(values=tuple(values), method=Method.FROM_TRIANGLE)
