"""Exception types shared across the package."""

from __future__ import annotations


class SumfreeError(Exception):
    """Base class for all domain errors raised by this package."""


class ModulusMismatchError(SumfreeError):
    """Two sets from different cyclic groups were combined."""


class IntervalCoversGroupError(SumfreeError):
    """An interval of length >= n was requested; use the full-set constructor."""


class NotAUnitError(SumfreeError):
    """A dilation factor shares a common divisor with the modulus."""


class ParameterError(SumfreeError):
    """Construction parameters are malformed or outside their domain."""


class DomainError(SumfreeError):
    """An argument violates an operation's precondition."""


class ConstructionError(SumfreeError):
    """A checked construction failed its own verification."""


class BudgetExceededError(SumfreeError):
    """An enumeration would exceed the configured search budget."""

    def __init__(self, message: str, required: int, limit: int):
        super().__init__(message)
        self.required = required
        self.limit = limit
