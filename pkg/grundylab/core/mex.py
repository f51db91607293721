__all__ = ["mex"]

from collections.abc import Iterable


def mex(values: Iterable[int]) -> int:
    """Возвращает наименьшее неотрицательное целое, не входящее в набор."""
    seen = values if isinstance(values, set | frozenset) else set(values)
    k = 0
    while k in seen:
        k += 1
    return k
