"""Exception hierarchy.

The CLI maps :class:`InputError` subclasses to exit status 2 and
:class:`MathError` subclasses to exit status 1.
"""

from __future__ import annotations


class HopfintError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HopfintError):
    """Malformed input: literals, algebra documents, diagram text."""


class MathError(HopfintError):
    """A mathematical identity failed or a precondition on values does not hold."""


class ScalarParseError(InputError, ValueError):
    pass


class FieldMismatchError(HopfintError, TypeError):
    """Operands belong to different fields."""


class DimensionError(HopfintError, ValueError):
    pass


class AlgebraFormatError(InputError, ValueError):
    pass


class UnknownBuiltinError(InputError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class AxiomError(MathError):
    """Raised when a structure fails one of the Hopf algebra axioms."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class TheoremViolation(MathError):
    """A statement that holds for every finite-dimensional Hopf algebra failed."""


class DiagramSyntaxError(InputError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class DiagramError(InputError, ValueError):
    """Structurally invalid diagram (dangling or doubly used ports, bad kinds)."""


class EvaluationError(MathError):
    """Diagram evaluation could not proceed (missing binding, bad matrix shape)."""
