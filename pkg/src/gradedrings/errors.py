"""Exception types shared across the library.

Every failure mode the library promises to detect maps to one of these, so
callers (and the command line driver) can translate them into exit codes
without string matching.
"""


class GradedRingError(Exception):
    """Base class for all library errors."""


class GroupMismatchError(GradedRingError):
    """Two grades (or a grade and a group) from different grading groups."""


class UnorderedGradingError(GradedRingError):
    """A total order was requested on a torsion grading group."""


class RingMismatchError(GradedRingError):
    """Arithmetic attempted between elements of different rings."""


class ScalarDomainError(GradedRingError):
    """A scalar value or operation invalid for its base ring."""


class PresentationError(GradedRingError):
    """An invalid ring presentation (bad relation, bad reduction setup)."""


class InfiniteRingError(GradedRingError):
    """Enumeration requested for a ring that is not finite."""


class CapExceededError(GradedRingError):
    """A configured bound (enumeration size, power search, degree) ran out.

    This is an honest "don't know within budget", never a wrong boolean.
    """


class UnsupportedFamilyError(GradedRingError):
    """The requested decision procedure has no sound route for this ring."""


class TheoremViolationError(GradedRingError):
    """An internal cross-check that should hold by theorem failed.

    Raising this is a bug detector: it means either the implementation or the
    mathematics backing it has been contradicted by a concrete computation.
    """


class ParseError(GradedRingError):
    """Ring-file or expression syntax error, carrying line/column info."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)
