"""
The Dirichlet bifurcation branch.

For γ ∈ (γ̄, 0) the shot first has U′ = 0 at R_γ; rescaling to the unit ball
gives a radial solution u_γ(x) = U(R_γ x)/U(R_γ) − 1 of Δ²u = λ(1+u)^p with
λ_γ = R_γ⁴ U(R_γ)^{p-1}. As γ ↓ γ̄, R_γ → ∞ and u_γ(0) → ∞; the limit of λ_γ
is the singular parameter λ_σ.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from ..dynamics.emden_fowler import integrate_autonomous
from ..schemas.branches import Branch, BranchPoint, DerivativeVanishes, DirichletProfile, GammaBar
from ..schemas.params import ProblemParams
from ..schemas.spectra import WPoint
from ..theory.spectrum import eigenvalues, eigenvector, fixed_point_w0
from ..utils.config_loader import load_defaults
from ..utils.constants import EVENT_W2_ZERO
from ..utils.errors import ClassificationError, DomainError, EstimatorError, PreconditionError
from ..utils.logger import get_logger
from .classify import Shot, find_gamma_bar, shoot

logger = get_logger(__name__)

ESTIMATOR_S_SPAN = 50.0
BRANCH_FIT_MAX_OFFSET = 1e-4


def parse_offsets(text: str) -> List[float]:
    """
    Parse an offsets flag: either a comma list ("1e-2,1e-4") or a decade
    range "1e-2..1e-8" expanded to one offset per decade, largest first.
    """
    text = text.strip()
    if ".." in text:
        first, last = (float(part) for part in text.split("..", 1))
        if not (first > 0 and last > 0):
            raise DomainError(f"offset range must be positive: {text!r}")
        hi, lo = max(first, last), min(first, last)
        k_hi, k_lo = round(math.log10(hi)), round(math.log10(lo))
        return [10.0**k for k in range(k_hi, k_lo - 1, -1)]
    values = [float(part) for part in text.split(",") if part.strip()]
    if not values:
        raise DomainError("no offsets given")
    return values


def _w1_peak(shot: Shot) -> float:
    w1 = shot.orbit().w()[:, 0]
    return float(np.max(w1))


def branch_point(
    params: ProblemParams,
    gamma: float,
    tol: Optional[float] = None,
    offset: Optional[float] = None,
) -> BranchPoint:
    """
    Branch sample at γ ∈ (γ̄, 0).

    Raises:
        ClassificationError: the shot does not classify DerivativeVanishes.
    """
    shot = shoot(params, gamma, tol=tol, r_max=math.exp(load_defaults().s_horizon))
    return _point_from_shot(shot, offset)


def _point_from_shot(shot: Shot, offset: Optional[float] = None) -> BranchPoint:
    cls = shot.shot_class
    if not isinstance(cls, DerivativeVanishes):
        raise ClassificationError(
            f"gamma={shot.gamma!r} classifies {cls.tag}, not DerivativeVanishes"
        )
    # U_at_R is U(R)/U(0); lambda needs the unnormalized U(R)
    return BranchPoint(
        gamma=shot.gamma,
        R_gamma=cls.R_gamma,
        U_at_R=cls.U_at_R,
        lam=shot.lam,
        u0=1.0 / cls.U_at_R - 1.0,
        w1_peak=_w1_peak(shot),
        offset=offset,
    )


def build_branch(
    params: ProblemParams,
    offsets: Sequence[float],
    gamma_bar: Optional[GammaBar] = None,
    tol: Optional[float] = None,
    workers: int = 1,
) -> Branch:
    """
    Branch points at γ = γ̄(1 − δ) for each relative offset δ.

    Points are evaluated concurrently and returned ordered by γ (smallest
    offset first). A non-decreasing R_γ between neighbours is recorded as a
    violation and logged, never raised.

    Raises:
        DomainError: offsets empty, outside (0, 1) or not strictly decreasing.
    """
    offsets = [float(d) for d in offsets]
    if not offsets:
        raise DomainError("build_branch needs at least one offset")
    if any(not 0 < d < 1 for d in offsets):
        raise DomainError(f"offsets must lie in (0, 1): {offsets}")
    if any(b >= a for a, b in zip(offsets, offsets[1:])):
        raise DomainError(f"offsets must be strictly decreasing: {offsets}")
    gamma_bar = gamma_bar or find_gamma_bar(params, tol=tol)

    def evaluate(delta: float) -> BranchPoint:
        return branch_point(params, gamma_bar.value * (1.0 - delta), tol=tol, offset=delta)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        points = list(pool.map(evaluate, offsets))
    points.sort(key=lambda pt: pt.gamma)

    violations: List[str] = []
    for prev, nxt in zip(points, points[1:]):
        if not nxt.R_gamma < prev.R_gamma:
            message = (
                f"R_gamma not decreasing: R({prev.gamma!r})={prev.R_gamma!r} "
                f"<= R({nxt.gamma!r})={nxt.R_gamma!r}"
            )
            logger.warning(message)
            violations.append(message)
    logger.info(f"branch built with {len(points)} points, {len(violations)} violations")
    return Branch(points=points, violations=violations)


def dirichlet_profile(shot: Shot, points: Optional[int] = None) -> DirichletProfile:
    """u_γ(x) = U(R x)/U(R) − 1 on a uniform grid of [0, 1], by dense-output interpolation."""
    cls = shot.shot_class
    if not isinstance(cls, DerivativeVanishes):
        raise ClassificationError(f"profile needs a DerivativeVanishes shot, got {cls.tag}")
    points = load_defaults().profile_points if points is None else points
    if points < 2:
        raise DomainError(f"a profile needs at least 2 points, got {points}")
    R = cls.R_gamma
    U_R = shot.event_state.U
    x = np.linspace(0.0, 1.0, points)
    u = np.array([shot.u_at(R * xi) for xi in x]) / U_R - 1.0
    u[-1] = 0.0
    return DirichletProfile(
        x=x,
        u=u,
        lam=shot.lam,
        u_at_one=0.0,
        du_at_one=R * shot.event_state.U1 / U_R,
    )


# ─────────────────────────────────────────────────────────────
# Singular parameter
# ─────────────────────────────────────────────────────────────

def unstable_manifold_lambda(params: ProblemParams, epsilon: float, tol: Optional[float] = None) -> float:
    """w₁^{p-1} at the first w₂ zero of the orbit from w⁽⁰⁾ + ε·ξ₁."""
    tol = load_defaults().tol if tol is None else tol
    xi1 = eigenvector(params, eigenvalues(params).nu[0]).real
    start = fixed_point_w0(params).as_array() + epsilon * xi1
    orbit = integrate_autonomous(
        params, WPoint.from_array(0.0, start), ESTIMATOR_S_SPAN, tol, stop_on=(EVENT_W2_ZERO,)
    )
    if orbit.terminal != EVENT_W2_ZERO:
        raise EstimatorError(
            f"no w2 zero within s-span {ESTIMATOR_S_SPAN} for epsilon={epsilon}",
            {"epsilon": epsilon, "terminal": orbit.terminal, "s_end": orbit.final.s},
        )
    return orbit.final.w1 ** (params.p - 1.0)


def estimate_lambda_sigma(
    params: ProblemParams,
    epsilons: Optional[Sequence[float]] = None,
    tol: Optional[float] = None,
) -> float:
    """
    Singular parameter from the unstable manifold of w⁽⁰⁾.

    Each ε gives λ(ε) = λ_σ + O(ε²); consecutive pairs are combined by
    Richardson extrapolation and the pair with the smallest ε is returned.

    Raises:
        PreconditionError: an epsilon outside [1e-10, 1e-6].
        EstimatorError: no w₂ zero before s = 50.
    """
    if epsilons is None:
        epsilons = load_defaults().epsilons
    eps = sorted((float(e) for e in epsilons), reverse=True)
    if not eps or any(not 1e-10 <= e <= 1e-6 for e in eps):
        raise PreconditionError(f"epsilons must lie in [1e-10, 1e-6]: {eps}")
    values = [unstable_manifold_lambda(params, e, tol) for e in eps]
    if len(values) == 1:
        return values[0]
    extrapolated = [
        (l2 * e1**2 - l1 * e2**2) / (e1**2 - e2**2)
        for (e1, l1), (e2, l2) in zip(zip(eps, values), zip(eps[1:], values[1:]))
    ]
    logger.debug(f"lambda_sigma raw={values} extrapolated={extrapolated}")
    return extrapolated[-1]


def branch_limit_lambda(params: ProblemParams, branch: Branch, max_offset: float = BRANCH_FIT_MAX_OFFSET) -> float:
    """
    Limit of λ_γ as γ ↓ γ̄, by linear least squares in s = ln R_γ.

    Model: λ_σ + e^{Re ν₃ s}(B cos(Im ν₃ s) + C sin(Im ν₃ s)) for a complex
    pair, λ_σ + B e^{ν₃ s} + C e^{ν₄ s} for real ν₃ ≠ ν₄ and
    λ_σ + (B + C s) e^{ν₃ s} for the double root. Points with offset
    <= max_offset are used when there are at least four of them.

    Raises:
        EstimatorError: fewer than three branch points.
    """
    pts = [pt for pt in branch.points if pt.offset is not None and pt.offset <= max_offset]
    if len(pts) < 4:
        pts = list(branch.points)
    if len(pts) < 3:
        raise EstimatorError("branch limit needs at least three points", {"points": len(pts)})
    s = np.log(np.array([pt.R_gamma for pt in pts]))
    lam = np.array([pt.lam for pt in pts])
    nu3, nu4 = eigenvalues(params).nu[2], eigenvalues(params).nu[3]
    if nu3.imag != 0.0:
        mu, omega = nu3.real, nu3.imag
        basis = [np.exp(mu * s) * np.cos(omega * s), np.exp(mu * s) * np.sin(omega * s)]
    elif nu3.real != nu4.real:
        basis = [np.exp(nu3.real * s), np.exp(nu4.real * s)]
    else:
        basis = [np.exp(nu3.real * s), s * np.exp(nu3.real * s)]
    A = np.column_stack([np.ones_like(s), *basis])
    coef, *_ = np.linalg.lstsq(A, lam, rcond=None)
    return float(coef[0])
