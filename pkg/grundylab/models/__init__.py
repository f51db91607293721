"""Модели данных предметной области."""

__all__ = [
    "RuleSequence",
    "GrundyPrefix",
    "PairTable",
    "values_of",
    "SubadditiveTriangle",
    "AssociatedArray",
    "OffsetArray",
    "OffsetRow",
    "SerialPosition",
    "Verdict",
    "FractalVerdict",
    "SequenceReport",
    "NamedCheck",
    "VerifyReport",
    "HostInfo",
    "Timing",
    "BenchReport",
    "SerialReport",
]

from .array import AssociatedArray, OffsetArray, OffsetRow
from .prefix import GrundyPrefix, PairTable, values_of
from .reports import (
    BenchReport,
    HostInfo,
    NamedCheck,
    SequenceReport,
    SerialReport,
    Timing,
    VerifyReport,
)
from .rule import RuleSequence
from .serial import SerialPosition
from .triangle import SubadditiveTriangle
from .verdict import FractalVerdict, Verdict
