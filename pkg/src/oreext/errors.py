"""Exception hierarchy shared by all modules."""


class OreError(Exception):
    """Base class for errors raised by this package."""


class UsageError(OreError, ValueError):
    """Operands or arguments do not fit together (e.g. elements of different rings)."""


class UnsupportedOperation(OreError):
    """The operation is not available for this ring / map combination."""


class LawViolation(OreError, ValueError):
    """A map failed its endomorphism or sigma-derivation law check."""


class PreconditionError(OreError, ValueError):
    """A mathematical hypothesis of the requested construction does not hold."""


class ProviderError(OreError):
    """A delta-simplicity provider could not express 1 from a coefficient."""

    def __init__(self, message, coefficient=None):
        super().__init__(message)
        self.coefficient = coefficient


class ParseError(UsageError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
