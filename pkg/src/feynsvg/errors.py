"""Diagnostics raised by every stage of the compiler.

All errors derive from :class:`FeynError` and may carry a 1-based source
position.  The class name doubles as the diagnostic code.
"""

from __future__ import annotations

from dataclasses import dataclass


class FeynError(Exception):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    @property
    def code(self) -> str:
        return type(self).__name__

    def located(self, line: int, col: int) -> "FeynError":
        """Attach a position if the error does not have one yet."""
        if self.line is None:
            self.line, self.col = line, col
        return self

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"{self.line}:{self.col}: {self.message}"


# --- lexing / parsing ---------------------------------------------------

class ParseError(FeynError):
    pass


class UnterminatedBrace(ParseError):
    pass


class UnterminatedMath(ParseError):
    pass


class IllegalCharacter(ParseError):
    pass


class MissingSemicolon(ParseError):
    pass


class UnknownCommand(ParseError):
    pass


class NestedBracketMismatch(ParseError):
    pass


class EmptyKey(ParseError):
    pass


class BadPercentage(ParseError):
    pass


class EmptyColorName(ParseError):
    pass


class UnbalancedEnvironment(ParseError):
    pass


# --- scene resolution ---------------------------------------------------

class SceneError(FeynError):
    pass


class UnknownStyle(SceneError):
    pass


class UnknownOption(SceneError):
    pass


class UnknownColor(SceneError):
    pass


class UnknownLengthTarget(SceneError):
    pass


class NonPositiveLength(SceneError):
    pass


class UndefinedVertex(SceneError):
    pass


class DuplicateVertex(SceneError):
    pass


class BadValue(SceneError):
    pass


# --- geometry / rendering -----------------------------------------------

class GeometryError(FeynError):
    pass


class DegenerateEndpoints(GeometryError):
    pass


class PathTooShort(GeometryError):
    pass


class EmptyScene(FeynError):
    pass


@dataclass(frozen=True)
class Diagnostic:
    """A non-fatal finding (currently only warnings) tied to a position."""

    severity: str
    code: str
    message: str
    line: int | None = None
    col: int | None = None

    def format(self, filename: str) -> str:
        line = self.line if self.line is not None else 0
        col = self.col if self.col is not None else 0
        return f"{filename}:{line}:{col}: {self.severity}: {self.message}"
