"""
Shooting on the Cauchy problem and the trichotomy of its solutions.

Below the critical value γ̄ the solution crosses zero, above it U′ vanishes
while U > 0, and at γ̄ itself the solution is global. Shots are integrated
radially up to the switch radius and continued in Emden–Fowler coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..dynamics.emden_fowler import integrate_autonomous, radial_to_w, w_to_radial
from ..integration.radial import integrate_radial, launch_radius, series_coefficients, series_launch
from ..schemas.branches import DerivativeVanishes, GammaBar, HitsZero, ShotClass, Undetermined
from ..schemas.params import ProblemParams
from ..schemas.spectra import WPoint
from ..schemas.trajectories import Orbit, RadialState, Trajectory
from ..utils.config_loader import load_defaults
from ..utils.constants import EVENT_W1_ZERO, EVENT_W2_ZERO
from ..utils.errors import BracketError, DomainError, PreconditionError
from ..utils.logger import get_logger

logger = get_logger(__name__)

BRACKET_START = (-1.0, -1e-3)
BRACKET_LIMITS = (-1e6, -1e-12)
BRACKET_GROWTH = 10.0
MAX_BISECTIONS = 200


@dataclass
class Shot:
    """
    One solution of the Cauchy problem: the radial leg up to the switch
    radius, the optional Emden–Fowler continuation, and its class.

    U_at_R in the class is normalized by the centre value U(0), which makes
    it invariant under the rescaling U_a(x) = a U(a^{(p-1)/4} x).
    """

    params: ProblemParams
    gamma: float
    center: float
    launch: RadialState
    radial: Trajectory
    continuation: Optional[Orbit]
    shot_class: ShotClass
    event_state: Optional[RadialState] = field(default=None)

    @property
    def event_radius(self) -> Optional[float]:
        return self.event_state.r if self.event_state is not None else None

    @property
    def lam(self) -> float:
        """R⁴ U(R)^{p-1} at the U′-zero; only defined for DerivativeVanishes shots."""
        if not isinstance(self.shot_class, DerivativeVanishes):
            raise DomainError(f"lambda needs a DerivativeVanishes shot, got {self.shot_class.tag}")
        st = self.event_state
        return st.r**4 * st.U ** (self.params.p - 1.0)

    def orbit(self) -> Orbit:
        """Whole shot in w-coordinates (radial leg converted, then the continuation)."""
        points = [radial_to_w(self.params, st) for st in self.radial.states]
        events = []
        terminal = self.radial.terminal_event.kind
        if self.continuation is not None:
            points.extend(self.continuation.points[1:])
            events = list(self.continuation.events)
            terminal = self.continuation.terminal
        return Orbit(points=points, events=events, terminal=terminal)

    def state_at(self, r: float) -> np.ndarray:
        """(U, U′, U″, U‴) anywhere on [0, final radius]."""
        if r < 0:
            raise DomainError(f"radius must be non-negative, got {r}")
        if r <= self.launch.r:
            c2, c4, c6 = series_coefficients(self.params, self.gamma, self.center)
            return np.array(
                [
                    self.center + c2 * r**2 + c4 * r**4 + c6 * r**6,
                    2 * c2 * r + 4 * c4 * r**3 + 6 * c6 * r**5,
                    2 * c2 + 12 * c4 * r**2 + 30 * c6 * r**4,
                    24 * c4 * r + 120 * c6 * r**3,
                ]
            )
        if r <= self.radial.final.r or self.continuation is None:
            return self.radial.dense(r)
        w = WPoint.from_array(math.log(r), self.continuation.dense(math.log(r)))
        return w_to_radial(self.params, w).as_array()

    def u_at(self, r: float) -> float:
        return float(self.state_at(r)[0])


def _classify(radial: Trajectory, continuation: Optional[Orbit], params: ProblemParams,
              center: float, r_max: float):
    event = radial.terminal_event
    if event.kind == "UCrossedZero":
        return HitsZero(R1=event.r), radial.final
    if event.kind == "UPrimeVanished":
        st = radial.final
        return DerivativeVanishes(R_gamma=st.r, U_at_R=st.U / center), st
    if continuation is None:
        return Undetermined(r_max=event.r), None
    last = continuation.final
    if continuation.terminal == EVENT_W1_ZERO:
        return HitsZero(R1=math.exp(last.s)), w_to_radial(params, last)
    if continuation.terminal == EVENT_W2_ZERO and last.w1 > 0:
        st = w_to_radial(params, last)
        return DerivativeVanishes(R_gamma=st.r, U_at_R=st.U / center), st
    return Undetermined(r_max=min(r_max, math.exp(last.s))), None


def shoot(
    params: ProblemParams,
    gamma: float,
    tol: Optional[float] = None,
    r_max: Optional[float] = None,
    center: float = 1.0,
) -> Shot:
    """
    Launch from the series at r0, integrate radially up to the switch radius,
    then continue in s = ln r until a w₁ or w₂ zero, a norm blow-up or ln r_max.

    Raises:
        PreconditionError: gamma >= 0.
        StiffnessError: propagated from the integrator.
    """
    if not gamma < 0:
        raise PreconditionError(f"gamma must be negative, got {gamma}")
    defaults = load_defaults()
    tol = defaults.tol if tol is None else tol
    r_max = defaults.r_max if r_max is None else r_max
    r0 = launch_radius(params, gamma, defaults.r0, center)
    launch = series_launch(params, gamma, r0, center)
    r_switch = min(defaults.r_switch, r_max)
    if r_switch <= r0:
        r_switch = r_max
    radial = integrate_radial(params, launch, r_switch, tol)

    continuation: Optional[Orbit] = None
    if radial.terminal_event.kind == "ReachedRMax" and r_switch < r_max:
        w_start = radial_to_w(params, radial.final)
        continuation = integrate_autonomous(
            params,
            w_start,
            math.log(r_max),
            tol,
            stop_on=(EVENT_W1_ZERO, EVENT_W2_ZERO),
        )

    shot_class, event_state = _classify(radial, continuation, params, center, r_max)
    logger.debug(f"shot gamma={gamma!r}: {shot_class.tag}")
    return Shot(
        params=params,
        gamma=gamma,
        center=center,
        launch=launch,
        radial=radial,
        continuation=continuation,
        shot_class=shot_class,
        event_state=event_state,
    )


def classify_shot(
    params: ProblemParams,
    gamma: float,
    tol: Optional[float] = None,
    r_max: Optional[float] = None,
) -> ShotClass:
    return shoot(params, gamma, tol=tol, r_max=r_max).shot_class


def find_gamma_bar(
    params: ProblemParams,
    rel_tol: float = 1e-13,
    tol: Optional[float] = None,
    r_max: Optional[float] = None,
) -> GammaBar:
    """
    Locate γ̄ by bisection on the shot class.

    The start bracket [-1, -1e-3] is widened by factors of ten until its
    lower end hits zero and its upper end has a vanishing derivative; the
    bisection then runs until (hi - lo)/|mid| < rel_tol. A midpoint that
    classifies Undetermined stops the search with the current bracket.

    Raises:
        PreconditionError: rel_tol < 1e-14.
        BracketError: no class change inside [-1e6, -1e-12].
    """
    if rel_tol < 1e-14:
        raise PreconditionError(f"rel_tol must be at least 1e-14, got {rel_tol}")
    defaults = load_defaults()
    r_max = math.exp(defaults.s_horizon) if r_max is None else r_max

    def cls(g: float) -> str:
        return classify_shot(params, g, tol=tol, r_max=r_max).tag

    lo, hi = BRACKET_START
    c_lo, c_hi = cls(lo), cls(hi)
    while not (c_lo == "HitsZero" and c_hi == "DerivativeVanishes"):
        if c_lo != "HitsZero":
            if c_lo == "DerivativeVanishes":
                hi, c_hi = lo, c_lo
            lo *= BRACKET_GROWTH
            if lo < BRACKET_LIMITS[0]:
                raise BracketError(
                    "no HitsZero shot found below the bracket",
                    {"lo": lo / BRACKET_GROWTH, "hi": hi, "lo_class": c_lo, "hi_class": c_hi},
                )
            c_lo = cls(lo)
            continue
        if c_hi == "HitsZero":
            lo, c_lo = hi, c_hi
        hi /= BRACKET_GROWTH
        if hi > BRACKET_LIMITS[1]:
            raise BracketError(
                "no DerivativeVanishes shot found above the bracket",
                {"lo": lo, "hi": hi * BRACKET_GROWTH, "lo_class": c_lo, "hi_class": c_hi},
            )
        c_hi = cls(hi)
    logger.info(f"gamma-bar bracket [{lo:.6g}, {hi:.6g}] for n={params.n}, p={params.p}")

    iterations = 0
    while (hi - lo) / abs(0.5 * (lo + hi)) >= rel_tol and iterations < MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        tag = cls(mid)
        iterations += 1
        logger.debug(f"bisection {iterations}: gamma={mid!r} -> {tag}")
        if tag == "HitsZero":
            lo = mid
        elif tag == "DerivativeVanishes":
            hi = mid
        else:
            logger.warning(f"undetermined shot at gamma={mid!r}; stopping with the current bracket")
            break

    gamma_bar = GammaBar(lo=lo, hi=hi, value=0.5 * (lo + hi), iterations=iterations)
    logger.info(f"gamma-bar = {gamma_bar.value!r} (relative width {gamma_bar.rel_width:.2e})")
    return gamma_bar


def near_critical_shot(params: ProblemParams, gamma_bar: GammaBar, tol: Optional[float] = None) -> Shot:
    """Shot at the HitsZero end of the γ̄ bracket, run to the search horizon."""
    r_max = math.exp(load_defaults().s_horizon)
    return shoot(params, gamma_bar.lo, tol=tol, r_max=r_max)


def near_critical_orbit(params: ProblemParams, gamma_bar: GammaBar, tol: Optional[float] = None) -> Orbit:
    return near_critical_shot(params, gamma_bar, tol).orbit()
