"""Diagnostics around the singular solution and the regularity verdict."""

from .diagnostics import (
    asymptotic_lower_radius,
    extremal_lower_bound,
    extremal_regularity_verdict,
    monotone_below_check,
    oscillation_report,
    pointwise_bound_check,
)

__all__ = [
    "oscillation_report",
    "monotone_below_check",
    "pointwise_bound_check",
    "extremal_regularity_verdict",
    "asymptotic_lower_radius",
    "extremal_lower_bound",
]
