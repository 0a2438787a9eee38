"""Exception types shared across the package."""


class WeylstdError(Exception):
    """Base class for errors raised by this package."""


class ParseError(WeylstdError):
    """Malformed operator expression.

    Carries the 1-based line/column of the offending token.
    """

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.bare_message = message
        self.line = line
        self.column = column


class ConfigError(WeylstdError):
    """Invalid run configuration (weights, field, tie-break, ...)."""


class DegreeCapExceeded(WeylstdError):
    """Completion would have to process pairs above the configured degree cap."""

    def __init__(self, degree, cap):
        super().__init__(f"degree cap reached: pending pair of degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class InvariantViolation(WeylstdError):
    """An internal self-check failed; indicates a bug, not bad input."""


class OracleSizeError(WeylstdError):
    """The brute-force staircase computation would exceed its size guard."""
