"""Shared result records and error types for the series evaluators."""

from __future__ import annotations

from dataclasses import dataclass, field


class DomainError(ValueError):
    """Argument outside the numeric domain an operation supports."""


class PoleProximityError(DomainError):
    """Evaluation would divide by a (near-)vanishing pole factor."""


class BudgetExceededError(RuntimeError):
    """A quadrature gave up before reaching the requested tolerance."""


class DefectError(RuntimeError):
    """An identity the implementation is contractually bound to uphold
    failed; indicates a defect, not a caller mistake."""


@dataclass
class SeriesReport:
    """Outcome of evaluating a truncated expansion at one argument.

    ``partial_sum`` is the truncated value, ``term_magnitudes[i]`` the
    absolute value of the i-th term. ``reference`` is an independently
    computed target value; errors are against it (None when no
    reference applies).
    """

    s: complex
    terms: int
    path: str
    partial_sum: complex
    reference: complex | None = None
    abs_error: float | None = None
    rel_error: float | None = None
    term_magnitudes: list[float] = field(default_factory=list)

    def with_reference(self, reference: complex) -> "SeriesReport":
        self.reference = reference
        self.abs_error = abs(self.partial_sum - reference)
        denom = abs(reference)
        self.rel_error = self.abs_error / denom if denom else float("inf")
        return self
