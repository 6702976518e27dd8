"""
The autonomous (Emden–Fowler) picture.

With s = ln r and a = 4/(p-1):

    w1 = r^a U
    w2 = r^a · r U′
    w3 = r^a (r² U″ − r U′)
    w4 = r^a (r³ U‴ + (n-1)(r² U″ − r U′))

the radial equation becomes a constant-coefficient 4D system whose only
nontrivial equilibrium w⁽⁰⁾ is the singular solution.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Tuple

import numpy as np

from ..integration.stepper import EventSpec, integrate
from ..schemas.params import ProblemParams
from ..schemas.reports import ConeReport
from ..schemas.spectra import WPoint, ZPoint
from ..schemas.trajectories import Orbit, RadialState
from ..theory.spectrum import eigenvalues, eigenvector, fixed_point_w0, nu2_eigenvector
from ..utils.config_loader import load_defaults
from ..utils.constants import EVENT_NORM_BLOW_UP, EVENT_W1_ZERO, EVENT_W2_ZERO
from ..utils.errors import DomainError, PreconditionError
from ..utils.logger import get_logger

logger = get_logger(__name__)

# cone sign patterns of (z1, z2, z3, z4) along +t and -t
CONE_PATTERNS = {"+": np.array([1, -1, 1, -1]), "-": np.array([-1, 1, -1, 1])}


# ─────────────────────────────────────────────────────────────
# Coordinate changes
# ─────────────────────────────────────────────────────────────

def radial_to_w(params: ProblemParams, state: RadialState) -> WPoint:
    a, n, r = params.a, params.n, state.r
    ra = r**a
    w3 = ra * (r * r * state.U2 - r * state.U1)
    return WPoint(
        s=math.log(r),
        w1=ra * state.U,
        w2=ra * r * state.U1,
        w3=w3,
        w4=ra * r**3 * state.U3 + (n - 1) * w3,
    )


def w_to_radial(params: ProblemParams, w: WPoint) -> RadialState:
    a, n = params.a, params.n
    r = math.exp(w.s)
    return RadialState(
        r=r,
        U=r ** (-a) * w.w1,
        U1=r ** (-a - 1) * w.w2,
        U2=r ** (-a - 2) * (w.w3 + w.w2),
        U3=r ** (-a - 3) * (w.w4 - (n - 1) * w.w3),
    )


def w_to_z(params: ProblemParams, w: WPoint) -> ZPoint:
    return ZPoint.from_array(w.s, w.as_array() - fixed_point_w0(params).as_array())


def z_to_w(params: ProblemParams, z: ZPoint) -> WPoint:
    return WPoint.from_array(z.s, z.as_array() + fixed_point_w0(params).as_array())


def radial_to_z(params: ProblemParams, state: RadialState) -> ZPoint:
    return w_to_z(params, radial_to_w(params, state))


# ─────────────────────────────────────────────────────────────
# Vector field
# ─────────────────────────────────────────────────────────────

def autonomous_field(params: ProblemParams):
    """Vector field (s, w) -> w′ for the stepper."""
    a, n, p = params.a, params.n, params.p
    d2, d3, d4 = a + 2.0, a - (n - 2.0), a - (n - 4.0)

    def fun(s: float, w: np.ndarray) -> np.ndarray:
        w1, w2, w3, w4 = w
        return np.array(
            [
                a * w1 + w2,
                d2 * w2 + w3,
                d3 * w3 + w4,
                np.abs(w1) ** (p - 1.0) * w1 + d4 * w4,
            ]
        )

    return fun


def autonomous_rhs(params: ProblemParams, w: WPoint) -> np.ndarray:
    return autonomous_field(params)(w.s, w.as_array())


def autonomous_events(norm_threshold: float, stop_on: Iterable[str] = ()) -> list:
    stop = set(stop_on)
    return [
        EventSpec(EVENT_W2_ZERO, lambda s, w: w[1], direction=0, terminal=EVENT_W2_ZERO in stop),
        EventSpec(EVENT_W1_ZERO, lambda s, w: w[0], direction=0, terminal=EVENT_W1_ZERO in stop),
        EventSpec(
            EVENT_NORM_BLOW_UP,
            lambda s, w: norm_threshold - float(np.linalg.norm(w)),
            direction=-1,
        ),
    ]


def integrate_autonomous(
    params: ProblemParams,
    w0: WPoint,
    s_end: float,
    tol: float,
    stop_on: Iterable[str] = (),
    norm_threshold: Optional[float] = None,
) -> Orbit:
    """
    Integrate the autonomous system from w0 to s_end, forward or backward.

    Records every w₂ and w₁ sign change; those named in ``stop_on`` end the
    run, as does |w| exceeding the norm threshold.

    Raises:
        DomainError: s_end == w0.s or a non-positive norm threshold.
        StiffnessError: propagated from the stepper.
    """
    threshold = load_defaults().norm_threshold if norm_threshold is None else norm_threshold
    if not threshold > 0:
        raise DomainError(f"norm threshold must be positive, got {threshold}")
    result = integrate(
        autonomous_field(params),
        w0.s,
        w0.as_array(),
        s_end,
        tol,
        autonomous_events(threshold, stop_on),
    )
    points = [WPoint.from_array(s, w) for s, w in zip(result.t, result.y)]
    terminal = result.terminal.name if result.terminal is not None else None
    return Orbit(points=points, events=result.events, terminal=terminal, dense=result.dense)


# ─────────────────────────────────────────────────────────────
# Linear surrogate and cone test
# ─────────────────────────────────────────────────────────────

def linearized_orbit(
    params: ProblemParams,
    epsilon: float,
    s_span: float,
    samples: int = 2001,
    s0: float = 0.0,
) -> Orbit:
    """Closed-form linear orbit w⁽⁰⁾ + ε·Re(e^{ν₃(s−s0)} ξ₃) on [s0, s0 + s_span]."""
    if samples < 2:
        raise DomainError("linearized_orbit needs at least two samples")
    nu3 = eigenvalues(params).nu[2]
    xi3 = eigenvector(params, nu3)
    base = fixed_point_w0(params).as_array()
    s = np.linspace(s0, s0 + s_span, samples)
    modes = np.real(np.exp(nu3 * (s - s0))[:, None] * xi3[None, :])
    w = base[None, :] + epsilon * modes
    return Orbit(points=[WPoint.from_array(si, wi) for si, wi in zip(s, w)])


def _cone_run(params: ProblemParams, direction: str, epsilon: float, s_span: float, tol: float) -> ConeReport:
    sign = 1.0 if direction == "+" else -1.0
    z_start = sign * epsilon * nu2_eigenvector(params).as_array()
    base = fixed_point_w0(params).as_array()
    orbit = integrate_autonomous(params, WPoint.from_array(0.0, base + z_start), -s_span, tol)
    s = orbit.s()
    z = orbit.w() - base[None, :]
    pattern = CONE_PATTERNS[direction]
    held = bool(np.all(np.sign(z) == pattern[None, :]))
    rate: Optional[float] = None
    if held and len(s) >= 2:
        rate = float(np.polyfit(-s, np.log(np.abs(z[:, 0])), 1)[0])
    logger.debug(f"cone {direction}: held={held} rate={rate} over {len(s)} steps")
    return ConeReport(
        direction=direction,
        s_span=s_span,
        pattern_held=held,
        measured_growth_rate=rate,
        steps=len(s),
    )


def cone_test(params: ProblemParams, epsilon: float, s_span: float, tol: float = 1e-12) -> Tuple[ConeReport, ConeReport]:
    """
    Backward integration from w⁽⁰⁾ ± ε·t along the ν₂-eigenvector.

    Returns the (+, −) reports; a broken sign pattern is reported through
    ``pattern_held=False``.

    Raises:
        PreconditionError: epsilon > 1e-4 or s_span < 1.
    """
    if not 0 < epsilon <= 1e-4:
        raise PreconditionError(f"epsilon must lie in (0, 1e-4], got {epsilon}")
    if s_span < 1:
        raise PreconditionError(f"s_span must be at least 1, got {s_span}")
    return (
        _cone_run(params, "+", epsilon, s_span, tol),
        _cone_run(params, "-", epsilon, s_span, tol),
    )
