"""Exception hierarchy shared by the library and the CLI."""


class LecycleError(Exception):
    """Base class for every error raised by this package."""


class ParseError(LecycleError):
    """Malformed polynomial text.  ``position`` is a 0-based column."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InputError(LecycleError):
    """Invalid germ, point, frame or corpus entry."""


class InfiniteLength(LecycleError):
    """A local quotient that should be finite has an unbounded staircase."""


class AdmissibilityError(LecycleError):
    """The coordinate frame is not generic enough for the polar construction."""


class NegativeResult(LecycleError):
    """An intersection number came out negative (internal tripwire)."""


class InconsistentCriteria(LecycleError):
    """The mu-constancy criteria disagree although they must be equivalent."""


class SampleOnY(InputError):
    """A sample point declared off Y actually lies on Y."""


class InternalError(LecycleError):
    """Two independent routes to the same quantity disagree."""
