__all__ = [
    "SequenceReport",
    "NamedCheck",
    "VerifyReport",
    "HostInfo",
    "Timing",
    "BenchReport",
    "SerialReport",
]

from pydantic import BaseModel

from grundylab.schemas import GameKind, Method, VerifyTarget

from .verdict import Verdict


class SequenceReport(BaseModel):
    """Вывод команд max, min и triangle reconstruct."""

    model_config = {"frozen": True}

    rule: str
    game: GameKind
    method: Method
    n: int
    values: tuple[int, ...]


class NamedCheck(BaseModel):
    model_config = {"frozen": True}

    name: str
    verdict: Verdict


class VerifyReport(BaseModel):
    """Результат команды verify: набор именованных вердиктов."""

    model_config = {"frozen": True}

    target: VerifyTarget
    source: str
    """Правило или путь к файлу последовательности."""

    checks: tuple[NamedCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.verdict.ok for check in self.checks)


class HostInfo(BaseModel):
    """Сведения о машине, на которой снимались замеры."""

    model_config = {"frozen": True}

    platform: str
    python: str
    cpu_count: int | None
    memory_total: int
    """Объем памяти в байтах."""


class Timing(BaseModel):
    model_config = {"frozen": True}

    method: Method
    n: int
    seconds: float
    terms_per_second: float


class BenchReport(BaseModel):
    """Замеры методов. Значения методов сверены до публикации замеров."""

    model_config = {"frozen": True}

    rule: str
    game: GameKind
    host: HostInfo
    timings: tuple[Timing, ...]
    speedup: dict[int, float]
    """Отношение времени naive к fast для каждого n."""


class SerialReport(BaseModel):
    """Вывод команд serial."""

    model_config = {"frozen": True}

    heaps: tuple[int, ...]
    value: int
    move: int | None = None
    """Новый размер левой кучки для выигрывающего хода."""

    table: tuple[int, ...] | None = None
    """Значения ([a, heaps…])_{a < limit}."""
