"""Utilities module for the supercritical biharmonic toolkit."""

from .config_loader import Defaults, load_defaults
from .errors import (
    BracketError,
    ClassificationError,
    ConsistencyError,
    DomainError,
    EstimatorError,
    NotApplicableError,
    NumericalError,
    PreconditionError,
    StiffnessError,
)
from .logger import get_logger

__all__ = [
    "get_logger",
    "Defaults",
    "load_defaults",
    "DomainError",
    "PreconditionError",
    "ClassificationError",
    "NotApplicableError",
    "NumericalError",
    "StiffnessError",
    "BracketError",
    "ConsistencyError",
    "EstimatorError",
]
