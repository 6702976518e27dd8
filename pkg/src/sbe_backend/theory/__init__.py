"""Closed-form theory: critical exponents and the linearization spectrum."""

from .exponents import (
    classify_regime,
    critical_exponent_pc,
    critical_sobolev_exponent,
    hardy_constant,
    k0,
    k0_times_p_minus_hardy,
)
from .spectrum import (
    characteristic_poly,
    eigenvalues,
    eigenvector,
    fixed_point_w0,
    linearization_matrix,
    n_coefficients,
    nu2_eigenvector,
)

__all__ = [
    "critical_sobolev_exponent",
    "k0",
    "hardy_constant",
    "k0_times_p_minus_hardy",
    "critical_exponent_pc",
    "classify_regime",
    "n_coefficients",
    "eigenvalues",
    "characteristic_poly",
    "linearization_matrix",
    "eigenvector",
    "nu2_eigenvector",
    "fixed_point_w0",
]
