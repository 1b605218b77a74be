"""Exception types shared across the package."""

from __future__ import annotations


class SplitdomError(Exception):
    """Base class for all package-specific errors."""


class GraphInputError(SplitdomError, ValueError):
    """Malformed graph input: bad graph6/edge-list text, invalid vertex set,
    loops, out-of-range indices.  Messages carry position information."""


class PreconditionError(SplitdomError):
    """An operation was called on a graph outside its stated domain
    (e.g. disconnected input, or a host that is not family-free).

    ``witness`` optionally carries evidence, such as a forbidden-pattern
    embedding found in the input.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class TheoremViolationError(SplitdomError):
    """A structural guarantee failed on an input that satisfies all checked
    preconditions.  This is a test-triage signal, never silently ignored."""


class BudgetExceededError(SplitdomError):
    """An exhaustive search refused to run because the input exceeds the
    supported size or subset-count budget."""
