class InvalidInput(ValueError):
    """Raised when an argument violates a documented precondition."""


class CorpusError(InvalidInput):
    """Malformed corpus input; ``lineno`` is 1-based, or None when not line-specific."""

    def __init__(self, message: str, lineno: int | None = None):
        super().__init__(message)
        self.lineno = lineno


class UndefinedCorrelation(ValueError):
    """Rank correlation is undefined because one side has zero rank variance."""


class OracleRefused(ValueError):
    """A dense reference solver was asked for a graph above its size cap."""
