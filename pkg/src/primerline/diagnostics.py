"""Diagnostics shared by the validators and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    code: str
    message: str
    path: str = ""
    line: int | None = None
    column: int | None = None

    def __str__(self) -> str:
        loc = ""
        if self.line is not None:
            loc = f"{self.line}:{self.column if self.column is not None else 0}: "
        where = f" [{self.path}]" if self.path else ""
        return f"{self.severity} {self.code}: {loc}{self.message}{where}"


@dataclass
class ValidityReport:
    valid: bool
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == ERROR]

    @property
    def warnings(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == WARNING]


def error(code: str, message: str, path: str = "", line: int | None = None,
          column: int | None = None) -> Diagnostic:
    return Diagnostic(ERROR, code, message, path, line, column)


def warning(code: str, message: str, path: str = "") -> Diagnostic:
    return Diagnostic(WARNING, code, message, path)
