"""Exception hierarchy shared by every module."""


class IntfamError(Exception):
    """Base class for library errors."""


class InputError(IntfamError, ValueError):
    """Malformed or inconsistent input (wrong ground set, bad element, ...)."""


class RangeError(InputError):
    """An integer argument fell outside its documented range."""


class ComparisonError(InputError):
    """A strict order was asked to compare a set with itself."""


class ParseError(InputError):
    """A family file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(IntfamError):
    """A desk-scale cap was exceeded."""


class ShiftGuardError(IntfamError, RuntimeError):
    """The shifting fixpoint loop broke its termination invariant."""
