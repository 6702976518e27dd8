"""
Radial Cauchy problem from the regular centre.

U⁗ + 2(n-1)/r U‴ + (n-1)(n-3)/r² U″ − (n-1)(n-3)/r³ U′ = |U|^{p-1} U,
U(0) = b, U′(0) = U‴(0) = 0, U″(0) = γ < 0.

The coefficients are singular at r = 0, so integration starts from a
short even Taylor series at a launch radius r0.
"""

from __future__ import annotations

from typing import List, Tuple

import numpy as np

from ..schemas.params import ProblemParams
from ..schemas.trajectories import (
    BlowUp,
    RadialState,
    ReachedRMax,
    TerminalEvent,
    Trajectory,
    UCrossedZero,
    UPrimeVanished,
)
from ..utils.config_loader import load_defaults
from ..utils.constants import (
    EVENT_BLOW_UP,
    EVENT_DERIVATIVE_BLOW_UP,
    EVENT_U_PRIME_ZERO,
    EVENT_U_ZERO,
)
from ..utils.errors import DomainError, PreconditionError
from ..utils.logger import get_logger
from .stepper import EventSpec, integrate

logger = get_logger(__name__)

MAX_LAUNCH_RADIUS = 0.01


def radial_field(params: ProblemParams):
    """Vector field (r, [U, U1, U2, U3]) -> [U1, U2, U3, U⁗] for the stepper."""
    n, p = params.n, params.p
    c3 = 2.0 * (n - 1)
    c2 = (n - 1.0) * (n - 3.0)

    def fun(r: float, y: np.ndarray) -> np.ndarray:
        u, u1, u2, u3 = y
        u4 = np.abs(u) ** (p - 1.0) * u - c3 / r * u3 - c2 / r**2 * u2 + c2 / r**3 * u1
        return np.array([u1, u2, u3, u4])

    return fun


def radial_rhs(params: ProblemParams, state: RadialState) -> float:
    """U⁗ at the given state; the equation is singular at r = 0."""
    if not state.r > 0:
        raise DomainError("radial_rhs needs r > 0; use series_launch at the centre")
    return float(radial_field(params)(state.r, state.as_array())[3])


def series_coefficients(params: ProblemParams, gamma: float, center: float = 1.0) -> Tuple[float, float, float]:
    """Coefficients (c2, c4, c6) of U = b + c2 r² + c4 r⁴ + c6 r⁶ + O(r⁸)."""
    n, p = params.n, params.p
    c2 = gamma / 2.0
    c4 = center**p / (8.0 * n * (n + 2))
    c6 = p * center ** (p - 1.0) * gamma / (48.0 * (n + 2) * (n + 4))
    return c2, c4, c6


def series_launch(params: ProblemParams, gamma: float, r0: float, center: float = 1.0) -> RadialState:
    """
    State at r0 of the even Taylor expansion about the centre.

    Raises:
        PreconditionError: gamma >= 0, center <= 0 or r0 outside (0, 0.01].
    """
    if not gamma < 0:
        raise PreconditionError(f"gamma must be negative, got {gamma}")
    if not center > 0:
        raise PreconditionError(f"centre value must be positive, got {center}")
    if not 0 < r0 <= MAX_LAUNCH_RADIUS:
        raise PreconditionError(f"r0 must lie in (0, {MAX_LAUNCH_RADIUS}], got {r0}")
    c2, c4, c6 = series_coefficients(params, gamma, center)
    r = r0
    return RadialState(
        r=r,
        U=center + c2 * r**2 + c4 * r**4 + c6 * r**6,
        U1=2 * c2 * r + 4 * c4 * r**3 + 6 * c6 * r**5,
        U2=2 * c2 + 12 * c4 * r**2 + 30 * c6 * r**4,
        U3=24 * c4 * r + 120 * c6 * r**3,
    )


def launch_radius(params: ProblemParams, gamma: float, r0: float, center: float = 1.0) -> float:
    """
    Shrink r0 so the series is accurate and no event precedes the launch.

    Uses min(r0, 0.1·sqrt(2b/|γ|), 0.1·ρ) with ρ the first positive zero of
    the series' U′.
    """
    c2, c4, c6 = series_coefficients(params, gamma, center)
    radius = min(r0, MAX_LAUNCH_RADIUS, 0.1 * np.sqrt(2.0 * center / abs(gamma)))
    # U′/r = 2c2 + 4c4 x + 6c6 x² with x = r²
    roots = np.roots([6 * c6, 4 * c4, 2 * c2])
    positive = [x.real for x in roots if abs(x.imag) < 1e-14 * max(1.0, abs(x)) and x.real > 0]
    if positive:
        radius = min(radius, 0.1 * float(np.sqrt(min(positive))))
    return float(radius)


def radial_events(blow_up_threshold: float, derivative_threshold: float) -> List[EventSpec]:
    return [
        EventSpec(EVENT_U_ZERO, lambda r, y: y[0], direction=-1),
        EventSpec(EVENT_U_PRIME_ZERO, lambda r, y: y[1], direction=+1, guard=lambda r, y: y[0] > 0),
        EventSpec(EVENT_BLOW_UP, lambda r, y: blow_up_threshold - abs(y[0]), direction=-1),
        EventSpec(
            EVENT_DERIVATIVE_BLOW_UP,
            lambda r, y: derivative_threshold - float(np.max(np.abs(y[1:]))),
            direction=-1,
        ),
    ]


def _terminal_event(name: str, r: float) -> TerminalEvent:
    if name == EVENT_U_ZERO:
        return UCrossedZero(r=r)
    if name == EVENT_U_PRIME_ZERO:
        return UPrimeVanished(r=r)
    if name == EVENT_BLOW_UP:
        return BlowUp(r=r, quantity="U")
    return BlowUp(r=r, quantity="derivative")


def integrate_radial(
    params: ProblemParams,
    start: RadialState,
    r_max: float,
    tol: float,
    blow_up_threshold: float | None = None,
    derivative_threshold: float | None = None,
) -> Trajectory:
    """
    Advance the radial state to r_max or to the first of: U crossing zero,
    U′ crossing zero from below while U > 0, |U| above the blow-up threshold,
    max |U′|, |U″|, |U‴| above the derivative threshold.

    Raises:
        DomainError: r_max <= start.r or a non-positive threshold.
        StiffnessError: propagated from the stepper.
    """
    if not r_max > start.r:
        raise DomainError(f"r_max={r_max} must exceed the start radius {start.r}")
    defaults = load_defaults()
    if blow_up_threshold is None:
        blow_up_threshold = defaults.blow_up_threshold
    if derivative_threshold is None:
        derivative_threshold = defaults.derivative_threshold
    if not (blow_up_threshold > 0 and derivative_threshold > 0):
        raise DomainError(
            f"thresholds must be positive, got {blow_up_threshold} and {derivative_threshold}"
        )
    events = radial_events(blow_up_threshold, derivative_threshold)
    result = integrate(radial_field(params), start.r, start.as_array(), r_max, tol, events)
    states = [RadialState.from_array(r, y) for r, y in zip(result.t, result.y)]
    if result.terminal is None:
        event: TerminalEvent = ReachedRMax(r=float(result.t[-1]))
    else:
        event = _terminal_event(result.terminal.name, float(result.t[-1]))
    logger.debug(
        f"radial run from r={start.r:.3e}: {event.kind} at r={event.r:.6g} "
        f"({result.n_accepted} accepted, {result.n_rejected} rejected)"
    )
    return Trajectory(states=states, terminal_event=event, dense=result.dense)
