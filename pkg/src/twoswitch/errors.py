"""Exception types raised across the package."""


class GraphFormatError(ValueError):
    """Malformed graph text (edge-list or graph6)."""

    def __init__(self, message, token=None):
        if token is not None:
            message = f"{message}: {token!r}"
        super().__init__(message)
        self.token = token


class NotGraphicalError(ValueError):
    """A degree sequence with no simple-graph realization."""


class CapExceededError(RuntimeError):
    """An exhaustive computation exceeded its configured size cap."""
