"""Exception types shared across the package."""


class CycleKitError(Exception):
    """Base class for all cyclekit errors."""


class GraphParseError(CycleKitError, ValueError):
    """Malformed graph input. Carries a byte offset or line number when known."""

    def __init__(self, message: str, *, offset: int | None = None,
                 line: int | None = None):
        loc = ""
        if offset is not None:
            loc = f" (byte offset {offset})"
        elif line is not None:
            loc = f" (line {line})"
        super().__init__(message + loc)
        self.offset = offset
        self.line = line


class DomainError(CycleKitError, ValueError):
    """Arguments outside the mathematical domain of an operation."""


class CapacityError(CycleKitError, ValueError):
    """Input exceeds a configured size limit (not a mathematical restriction)."""


class PreconditionError(CycleKitError, ValueError):
    """A documented precondition of a transformation does not hold."""
