"""Shooting: shot classification, the critical value γ̄ and the Dirichlet branch."""

from .branch import (
    branch_limit_lambda,
    branch_point,
    build_branch,
    dirichlet_profile,
    estimate_lambda_sigma,
    parse_offsets,
    unstable_manifold_lambda,
)
from .classify import (
    Shot,
    classify_shot,
    find_gamma_bar,
    near_critical_orbit,
    near_critical_shot,
    shoot,
)

__all__ = [
    "Shot",
    "shoot",
    "classify_shot",
    "find_gamma_bar",
    "near_critical_shot",
    "near_critical_orbit",
    "branch_point",
    "build_branch",
    "dirichlet_profile",
    "parse_offsets",
    "unstable_manifold_lambda",
    "estimate_lambda_sigma",
    "branch_limit_lambda",
]
