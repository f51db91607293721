__all__ = ["sum_position_move"]

from functools import reduce
from operator import xor

from grundylab.config import logger
from grundylab.core import rule_values
from grundylab.models import RuleSequence

from .grundy import grundy


def sum_position_move(heaps: list[int], rule: RuleSequence) -> tuple[int, int] | None:
    """Находит выигрывающий ход в сумме кучек Maximum Nim.

    Из кучки размера m можно взять от 1 до f(m) камней. Выбирается кучка с
    наименьшим индексом, затем наибольшее число взятых камней.

    :param heaps: Размеры кучек.
    :param rule: Правило f.
    :return: (индекс кучки, новый размер) или None, если XOR значений уже 0.
    """
    if not heaps:
        return None
    top = max(heaps)
    values = grundy(rule, top + 1).values
    f = rule_values(rule, top)

    total = reduce(xor, (values[m] for m in heaps), 0)
    if total == 0:
        return None

    for index, m in enumerate(heaps):
        target = total ^ values[m]
        for removed in range(f[m], 0, -1):
            if values[m - removed] == target:
                logger.debug(f"winning move: heap {index} {m} -> {m - removed}")
                return index, m - removed
    raise AssertionError(f"no move reaches XOR 0 from {heaps}")
