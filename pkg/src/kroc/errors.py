"""Exception hierarchy.

Every error raised on bad input derives from :class:`KrocError` (itself a
``ValueError``) so callers can catch the family in one place.  The CLI maps
:class:`DegenerateDataError` subclasses to exit code 3 and
:class:`ParseError` to exit code 2.
"""

from __future__ import annotations


class KrocError(ValueError):
    """Base class for all input errors."""


class ParseError(KrocError):
    """Malformed input file or malformed sample values."""


class InvalidLabel(ParseError):
    """A label outside {0, 1}."""


class NonFiniteScore(ParseError):
    """A NaN or infinite score."""


class DegenerateDataError(KrocError):
    """Data on which the rates of one class are undefined."""


class EmptySample(DegenerateDataError):
    """Fewer than two entries."""


class SingleClassSample(DegenerateDataError):
    """Only one of the two classes is present."""

    def __init__(self, n_target: int, n_complement: int):
        self.n_target = n_target
        self.n_complement = n_complement
        super().__init__(
            f"sample needs both classes, got n_target={n_target}, "
            f"n_complement={n_complement}"
        )


class DegeneratePrevalence(DegenerateDataError):
    """Target prevalence of exactly 0 or 1."""


class InsufficientFolds(KrocError):
    """Averaging needs at least two curves."""
