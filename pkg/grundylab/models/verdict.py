__all__ = ["Verdict", "FractalVerdict"]

from typing import Any

from pydantic import BaseModel

from grundylab.schemas import Status


class Verdict(BaseModel):
    """Вердикт проверки бесконечного свойства на конечном окне.

    PASS означает «нарушений на окне нет», FAIL точен и несет свидетеля,
    UNDETERMINED: окно ничего не решает.
    """

    model_config = {"frozen": True}

    status: Status
    window: int
    witness: int | None = None
    """Наименьший нарушающий индекс, если применимо."""

    pair: tuple[int, ...] | None = None
    """Значения, на которых найдено нарушение (пара или тройка)."""

    detail: str = ""

    @property
    def ok(self) -> bool:
        """True, если нарушение не найдено."""
        return self.status != Status.FAIL

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, window: int, detail: str = "") -> "Verdict":
        return cls(status=Status.PASS, window=window, detail=detail)

    @classmethod
    def failed(cls, window: int, detail: str, witness: int | None = None, **kwargs: Any) -> "Verdict":
        return cls(status=Status.FAIL, window=window, witness=witness, detail=detail, **kwargs)

    @classmethod
    def undetermined(cls, window: int, detail: str = "") -> "Verdict":
        return cls(status=Status.UNDETERMINED, window=window, detail=detail)


class FractalVerdict(BaseModel):
    """Результат check_fractal: F2, F3 и непроверяемое свойство бесконечности вхождений."""

    model_config = {"frozen": True}

    f2: Verdict
    f3: Verdict
    infinitive: Status = Status.UNDETERMINED
    """Из конечного префикса не решается, поэтому всегда «не проверено»."""

    window: int

    @property
    def ok(self) -> bool:
        return self.f2.ok and self.f3.ok

    def __bool__(self) -> bool:
        return self.ok
