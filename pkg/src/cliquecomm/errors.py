"""Exception types shared across the package."""


class CliquecommError(Exception):
    """Base class for all package-specific errors."""


class EmptyGraphError(CliquecommError, ValueError):
    """Raised when an operation needs a graph with at least one vertex."""


class InvalidParamsError(CliquecommError, ValueError):
    """Raised for generator or operation parameters outside their domain."""


class InconsistentRelationError(CliquecommError, ValueError):
    """Raised when a relation violates diagonal determinism or totality."""


class CapExceededError(CliquecommError, RuntimeError):
    """Raised when an exhaustive search would exceed its configured cap."""


class SearchExhaustedError(CliquecommError, RuntimeError):
    """Raised when a protocol search finds no solution where one was expected."""


class ConstructionFailedError(CliquecommError, RuntimeError):
    """Raised when no certified orthogonal representation could be built."""


class ConditionsNotMetError(CliquecommError, ValueError):
    """Raised when a protocol's structural graph preconditions fail."""


class UnverifiedRepresentationError(CliquecommError, ValueError):
    """Raised when a quantum strategy is used before its representation passes checks."""
