"""
Exception hierarchy shared by every module.

Domain errors map to CLI exit code 2, numerical failures to exit code 3.
"""

from __future__ import annotations

from typing import Any, Dict, Optional


class DomainError(ValueError):
    """Invalid input or violated precondition."""


class PreconditionError(DomainError):
    """An operation was called outside the regime it is defined for."""


class ClassificationError(DomainError):
    """A shot did not classify the way the caller required."""


class NotApplicableError(DomainError):
    """A diagnostic cannot be evaluated on the given trajectory."""


class NumericalError(RuntimeError):
    """A numerical procedure failed to deliver a result."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": str(self), **self.diagnostics}


class StiffnessError(NumericalError):
    """Step size underflow or exhausted step budget."""


class BracketError(NumericalError):
    """No sign change / class change could be bracketed."""


class ConsistencyError(NumericalError):
    """An internal invariant that theory guarantees was violated."""


class EstimatorError(NumericalError):
    """An estimator did not observe the event it relies on."""
