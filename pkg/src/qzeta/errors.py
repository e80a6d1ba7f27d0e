"""Exception types shared by all qzeta evaluators."""

from __future__ import annotations


class QZetaError(Exception):
    """Base class for all library errors."""


class DomainError(QZetaError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """The requested point is a pole of the function."""


class SingularSeriesError(QZetaError):
    """A power series with vanishing leading coefficient cannot be inverted."""


class ConsistencyError(QZetaError):
    """Two independent evaluation routes disagree beyond their error budget."""


class TruncationError(QZetaError):
    """A series failed to meet its tolerance within the term budget.

    Carries the last certified tail bound and the number of terms consumed.
    """

    def __init__(self, message: str, tail_bound: float, terms_used: int):
        super().__init__(message)
        self.tail_bound = tail_bound
        self.terms_used = terms_used
