"""Autonomous Emden–Fowler dynamics around the singular solution."""

from .emden_fowler import (
    autonomous_field,
    autonomous_rhs,
    cone_test,
    integrate_autonomous,
    linearized_orbit,
    radial_to_w,
    radial_to_z,
    w_to_radial,
    w_to_z,
    z_to_w,
)

__all__ = [
    "radial_to_w",
    "w_to_radial",
    "radial_to_z",
    "w_to_z",
    "z_to_w",
    "autonomous_field",
    "autonomous_rhs",
    "integrate_autonomous",
    "linearized_orbit",
    "cone_test",
]
