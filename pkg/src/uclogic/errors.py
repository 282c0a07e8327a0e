"""Exception types shared across the package."""


class UCLError(Exception):
    """Base class for all errors raised by uclogic."""


class ParseError(UCLError):
    """Malformed formula, polynomial, or valuation text."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class GateLimitError(UCLError):
    """Outcome enumeration refused: too many unreliable gates."""

    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(
            f"formula has {count} unreliable gates, exceeding the limit of "
            f"{limit}; raise the limit explicitly to proceed (cost is 2^{count})"
        )
