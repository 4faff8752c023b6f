"""Exception types shared across the package."""
from __future__ import annotations


class QCTError(Exception):
    """Base class; the CLI maps every subclass to exit code 2."""


class QuiverSyntaxError(QCTError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class QuiverValidationError(QCTError):
    """Duplicate ids, unknown vertices and similar structural problems."""


class UnknownVertexError(QuiverValidationError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class DisconnectedQuiverError(QCTError):
    pass


class NotPreAdmissibleError(QCTError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotAdmissibleError(QCTError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ShapeError(QCTError):
    """An operation was called on a quiver of the wrong shape."""


class DegreeError(QCTError):
    pass


class ResolutionCapExceeded(QCTError):
    pass
