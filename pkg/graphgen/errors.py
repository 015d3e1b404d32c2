"""
Exception hierarchy for graphgen.

Every error raised on purpose by the library derives from GraphGenError so
the command line can map it to a runtime failure exit code.
"""


class GraphGenError(Exception):
    """Base exception for graphgen operations."""
    pass


class DomainError(GraphGenError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""
    pass


class RangeError(GraphGenError, ValueError):
    """Raised when an index, rank or interval bound is out of range."""
    pass


class CapacityError(GraphGenError):
    """Raised when a request exceeds the supported scale."""
    pass


class CountOverflowError(CapacityError, OverflowError):
    """Raised when an exact count does not fit in 128 bits."""
    pass


class ContractError(GraphGenError):
    """Raised when a caller breaks an operation's precondition."""
    pass


class ModelValidityError(DomainError):
    """Raised when model parameters imply a probability outside [0, 1]."""
    pass


class ShapeError(GraphGenError, ValueError):
    """Raised when matrix or node-space dimensions do not fit together."""
    pass


class ParseError(GraphGenError, ValueError):
    """Raised when an input file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphIOError(GraphGenError):
    """Raised when writing to an output sink fails."""
    pass


class UsageError(GraphGenError):
    """Raised when a command-line request is malformed or inconsistent."""
    pass
