"""Exception types shared across the workbench."""

from __future__ import annotations


class FkaError(Exception):
    """Base class for all workbench errors."""


class ParseError(FkaError):
    """Malformed .fka file or term text; carries the offending line number
    when one is known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SortError(FkaError):
    """A two-sorted term violates the test/program sort discipline."""


class MissingTableError(FkaError):
    """An axiom suite or evaluator needs an operation table the model lacks."""


class EvaluationError(FkaError):
    """A valuation does not cover the term being evaluated."""


class BudgetError(FkaError):
    """An enumeration would exceed the configured evaluation budget."""


class ClosureCapError(FkaError):
    """A relational closure grew past the configured carrier cap."""


class PreconditionError(FkaError):
    """A construction was applied to input violating its stated precondition."""
