"""Diagnostic records shared by the lexer, parser, and metric passes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Severity(Enum):
    WARNING = "warning"
    ERROR = "error"


@dataclass(frozen=True)
class Diagnostic:
    file: str
    line: int
    severity: Severity
    message: str

    def __str__(self) -> str:
        return f"{self.file}:{self.line}: {self.severity.value}: {self.message}"


def warning(file: str, line: int, message: str) -> Diagnostic:
    return Diagnostic(file, line, Severity.WARNING, message)


def error(file: str, line: int, message: str) -> Diagnostic:
    return Diagnostic(file, line, Severity.ERROR, message)
