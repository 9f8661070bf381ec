"""Exception types shared across the package."""


class TuranLabError(Exception):
    """Base class for all package errors."""


class CapacityError(TuranLabError):
    """An input exceeds a hard size bound (vertex cap, oracle cap, ...)."""


class ArgumentError(TuranLabError, ValueError):
    """An argument violates an operation's documented bounds."""


class PreconditionError(TuranLabError, ValueError):
    """A claim's mathematical hypotheses do not hold for the given input."""


class ParseError(TuranLabError, ValueError):
    """A graph expression could not be parsed.

    ``offset`` is the byte offset into the input where parsing failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class Graph6Error(TuranLabError, ValueError):
    """Malformed graph6 data."""
