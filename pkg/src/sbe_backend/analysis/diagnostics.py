"""
Diagnostics around the singular solution u_s = K₀^{1/(p-1)} r^{-4/(p-1)}.

Everything works in Emden–Fowler coordinates, where u_s is the constant
w₁ = K₀^{1/(p-1)} and U − u_s changes sign exactly when w₁ crosses it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..schemas.branches import BranchPoint, DirichletProfile
from ..schemas.params import ProblemParams, RegimeTag
from ..schemas.reports import OscillationReport, PointwiseBoundReport, RegularityVerdict
from ..schemas.trajectories import Orbit
from ..theory.exponents import classify_regime, critical_exponent_pc, hardy_constant, k0
from ..theory.spectrum import fixed_point_w0
from ..utils.config_loader import load_defaults
from ..utils.errors import DomainError, NotApplicableError, PreconditionError
from ..utils.logger import get_logger

logger = get_logger(__name__)

POINTWISE_BOUND = 1.05


@dataclass(frozen=True)
class _Window:
    closest: int
    end: int


def _reliable_window(params: ProblemParams, orbit: Orbit, fraction: Optional[float]) -> _Window:
    """
    Index of the closest approach to w⁽⁰⁾ and of the first later sample whose
    distance exceeds fraction·|w⁽⁰⁾| (the last sample if there is none).
    """
    if fraction is None:
        fraction = load_defaults().reliable_fraction
    if not 0 < fraction < 1:
        raise DomainError(f"reliable fraction must lie in (0, 1), got {fraction}")
    base = fixed_point_w0(params).as_array()
    radius = fraction * float(np.linalg.norm(base))
    dist = np.linalg.norm(orbit.w() - base[None, :], axis=1)
    closest = int(np.argmin(dist))
    if not dist[closest] < radius:
        raise NotApplicableError(
            f"orbit never comes within {radius:.3g} of the fixed point "
            f"(closest distance {dist[closest]:.3g})"
        )
    beyond = np.nonzero(dist[closest:] > radius)[0]
    end = closest + int(beyond[0]) if beyond.size else len(dist) - 1
    return _Window(closest=closest, end=end)


def oscillation_report(
    params: ProblemParams,
    orbit: Orbit,
    reliable_fraction: Optional[float] = None,
) -> OscillationReport:
    """
    Sign changes of w₁ − K₀^{1/(p-1)} from the start of the orbit up to the
    end of its reliable window; crossings are located by linear
    interpolation between samples.

    Raises:
        NotApplicableError: the orbit never approaches w⁽⁰⁾.
        DomainError: reliable_fraction outside (0, 1).
    """
    window = _reliable_window(params, orbit, reliable_fraction)
    c = fixed_point_w0(params).w1
    s = orbit.s()[: window.end + 1]
    g = orbit.w()[: window.end + 1, 0] - c

    crossings = []
    last_idx = None
    for i, gi in enumerate(g):
        if gi == 0.0:
            continue
        if last_idx is not None and (g[last_idx] < 0) != (gi < 0):
            s0, s1 = s[last_idx], s[i]
            g0, g1 = g[last_idx], gi
            crossings.append(math.exp(s0 + (s1 - s0) * g0 / (g0 - g1)))
        last_idx = i

    report = OscillationReport(
        sign_changes=len(crossings),
        crossing_radii=crossings,
        final_ratio=float(orbit.points[window.end].w1 / c),
        reliable_r_max=math.exp(s[-1]),
        closest_ratio=float(orbit.points[window.closest].w1 / c),
    )
    logger.info(
        f"{report.sign_changes} sign changes up to r={report.reliable_r_max:.4g} "
        f"(closest ratio {report.closest_ratio:.6f})"
    )
    return report


def monotone_below_check(
    params: ProblemParams,
    orbit: Orbit,
    reliable_fraction: Optional[float] = None,
) -> bool:
    """
    True iff w₁ < K₀^{1/(p-1)} at every sample up to the end of the reliable window.

    Raises:
        PreconditionError: the parameters are in the oscillatory regime.
    """
    regime = classify_regime(params)
    if regime.tag != RegimeTag.MONOTONE:
        raise PreconditionError(
            f"monotone check needs p >= p_c; (n={params.n}, p={params.p}) is {regime.tag.value}"
        )
    window = _reliable_window(params, orbit, reliable_fraction)
    c = fixed_point_w0(params).w1
    return bool(np.all(orbit.w()[: window.end + 1, 0] < c))


def pointwise_bound_check(
    params: ProblemParams,
    point: BranchPoint,
    profile: DirichletProfile,
    lambda_star_est: float,
) -> PointwiseBoundReport:
    """
    max over the grid of (1 + u_γ(x))·x^{4/(p-1)}·(λ_γ/λ̂*)^{1/(p-1)}.

    λ̂* underestimates λ*, so the check is soft: a value above 1.05 is
    logged and reported, never raised.
    """
    a = params.a
    factor = (point.lam / lambda_star_est) ** (1.0 / (params.p - 1.0))
    values = (1.0 + profile.u) * profile.x**a * factor
    k = int(np.argmax(values))
    report = PointwiseBoundReport(
        max_value=float(values[k]),
        argmax_x=float(profile.x[k]),
        bound=POINTWISE_BOUND,
        within_bound=bool(values[k] <= POINTWISE_BOUND),
    )
    if not report.within_bound:
        logger.warning(
            f"pointwise bound exceeded at gamma={point.gamma!r}: {report.max_value:.4f} > {POINTWISE_BOUND}"
        )
    return report


def extremal_regularity_verdict(params: ProblemParams) -> RegularityVerdict:
    pK0 = params.p * k0(params)
    hardy = hardy_constant(params.n)
    p_c = critical_exponent_pc(params.n)
    regular = pK0 > hardy and (p_c is None or params.p < p_c)
    return RegularityVerdict(
        pK0=pK0,
        hardy=hardy,
        p_c=p_c,
        verdict="ExtremalRegular" if regular else "NoConclusion",
    )


def asymptotic_lower_radius(
    params: ProblemParams,
    orbit: Orbit,
    epsilon: float,
    reliable_fraction: Optional[float] = None,
) -> float:
    """
    Smallest sample radius from which U(r) > (K₀^{1/(p-1)} − ε) r^{-4/(p-1)}
    holds up to the closest approach to the singular solution.

    Raises:
        NotApplicableError: the bound fails at the closest approach itself.
    """
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    window = _reliable_window(params, orbit, reliable_fraction)
    c = fixed_point_w0(params).w1
    w1 = orbit.w()[: window.closest + 1, 0]
    above = w1 > c - epsilon
    if not above[-1]:
        raise NotApplicableError(f"w1 stays below K0^(1/(p-1)) - {epsilon} at closest approach")
    failing = np.nonzero(~above)[0]
    k = int(failing[-1]) + 1 if failing.size else 0
    return math.exp(orbit.points[k].s)


def extremal_lower_bound(params: ProblemParams, lam: float, x) -> np.ndarray:
    """(K₀/λ)^{1/(p-1)} |x|^{-4/(p-1)} − 1 on points of (0, 1]."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x <= 0):
        raise DomainError("extremal_lower_bound is evaluated on x > 0 only")
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    return (k0(params) / lam) ** (1.0 / (params.p - 1.0)) * np.abs(x) ** (-params.a) - 1.0
