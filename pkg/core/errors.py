"""Exception types shared by the algebra core, the CLI and the local agent."""


class PatternHallError(Exception):
    """Base class for every error PatternHall raises on purpose."""


class ParseError(PatternHallError, ValueError):
    """Raised when an expression, pattern or series token cannot be read."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class SeriesFormatError(ParseError):
    """Raised for non-numeric tokens in a series file."""


class DimensionError(PatternHallError, ValueError):
    """Raised when sizes that must agree do not (host vs partition, gaps vs pattern)."""


class SizeGuardError(PatternHallError, RuntimeError):
    """Raised when an exponential enumeration would exceed its configured guard."""

    def __init__(self, kind, size, limit):
        super().__init__(
            f"{kind}: input size {size} exceeds the size guard {limit} "
            f"(raise it with VINC_SIZE_GUARD or the config file)"
        )
        self.kind = kind
        self.size = size
        self.limit = limit


class EvaluationError(PatternHallError, ValueError):
    """Raised by the expression evaluator for unknown functions or bad arguments."""
