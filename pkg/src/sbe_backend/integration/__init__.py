"""ODE integration: the embedded Runge–Kutta driver and the radial Cauchy problem."""

from .radial import (
    integrate_radial,
    launch_radius,
    radial_field,
    radial_rhs,
    series_coefficients,
    series_launch,
)
from .stepper import DormandPrince54, EventSpec, IntegrationResult, Integrator, integrate

__all__ = [
    "Integrator",
    "DormandPrince54",
    "EventSpec",
    "IntegrationResult",
    "integrate",
    "radial_field",
    "radial_rhs",
    "series_coefficients",
    "series_launch",
    "launch_radius",
    "integrate_radial",
]
