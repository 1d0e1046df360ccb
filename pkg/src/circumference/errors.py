"""Exception types shared across the package."""


class Graph6Error(ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListError(ValueError):
    """Malformed edge-list input."""


class CapacityError(RuntimeError):
    """A configured size or budget limit would be exceeded."""

    def __init__(self, message: str, partial: int | None = None):
        super().__init__(message)
        self.partial = partial


class DegenerateCircumferenceError(ValueError):
    """The graph has no cycle of length at least 3."""


class HypothesisError(ValueError):
    """A checker refused to run because its preconditions could not be certified."""


class SolverMismatchError(RuntimeError):
    """The subset DP and the brute-force oracle disagree."""
