"""Пакет перечислений."""

__all__ = [
    "EnvironmentType",
    "RuleKind",
    "GameKind",
    "Method",
    "Status",
    "OutputFormat",
    "VerifyTarget",
    "SchemaName",
]

from .enums import (
    EnvironmentType,
    GameKind,
    Method,
    OutputFormat,
    RuleKind,
    SchemaName,
    Status,
    VerifyTarget,
)
