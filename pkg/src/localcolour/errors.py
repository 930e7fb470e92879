"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed input file. Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LoopError(ValueError):
    """A multigraph edge had equal endpoints."""


class StructureError(ValueError):
    """A composition, join or decomposition tree violates its structural contract."""


class ColouringError(ValueError):
    """An assignment would make an edge colouring improper, or used a bad colour."""


class InfeasiblePalette(ValueError):
    """Requested palette is smaller than the local edge bound."""


class GuardExceeded(RuntimeError):
    """An exponential-time oracle was asked to work beyond its configured limits."""


class InvariantViolation(RuntimeError):
    """A state the algorithm proves unreachable was reached. Always a bug."""
