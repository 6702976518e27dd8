"""
Embedded explicit Runge–Kutta integration with PI step control, dense
output and event location.

The integrator never knows what it integrates: the radial and the
autonomous drivers hand it a right-hand side, a span and a list of
``EventSpec``s.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ..schemas.trajectories import DenseOutput, EventHit
from ..utils.constants import EVENT_REL_ACCURACY
from ..utils.errors import DomainError, StiffnessError
from ..utils.logger import get_logger

logger = get_logger(__name__)

RHS = Callable[[float, np.ndarray], np.ndarray]

SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 5.0
# PI controller exponents (beta = 0.04, alpha = 1/5 - 0.75 beta)
BETA = 0.04
ALPHA = 0.2 - 0.75 * BETA
MAX_EVENT_BISECTIONS = 100


@dataclass(frozen=True)
class EventSpec:
    """
    Zero of ``fn(t, y)`` to watch for.

    direction: +1 only rising crossings, -1 only falling, 0 both.
    guard: optional predicate on the located state; crossings failing it are ignored.
    """

    name: str
    fn: Callable[[float, np.ndarray], float]
    direction: int = 0
    terminal: bool = True
    guard: Optional[Callable[[float, np.ndarray], bool]] = None


@dataclass
class IntegrationResult:
    t: np.ndarray
    y: np.ndarray
    events: List[EventHit] = field(default_factory=list)
    terminal: Optional[EventHit] = None
    dense: Optional[DenseOutput] = None
    n_accepted: int = 0
    n_rejected: int = 0


@dataclass
class StepAttempt:
    y_new: np.ndarray
    f_new: np.ndarray
    error: np.ndarray
    K: np.ndarray


# ─────────────────────────────────────────────────────────────
# Methods
# ─────────────────────────────────────────────────────────────

class Integrator(ABC):
    """An embedded explicit pair with a continuous extension."""

    order: int
    error_order: int

    @abstractmethod
    def step(self, fun: RHS, t: float, y: np.ndarray, f: np.ndarray, h: float) -> StepAttempt:
        """Take one trial step of size h from (t, y) with f = fun(t, y)."""
        raise NotImplementedError

    @abstractmethod
    def dense_coefficients(self, K: np.ndarray) -> np.ndarray:
        """Return Q with y(t + θh) = y + h Q @ (θ, θ², θ³, θ⁴)."""
        raise NotImplementedError


class DormandPrince54(Integrator):
    """
    Dormand–Prince 5(4) pair, seven stages with FSAL.

    The 5th order solution is propagated; the embedded 4th order one drives
    the error estimate. The continuous extension is of order 4.
    """

    order = 5
    error_order = 4

    C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0])
    A = [
        np.array([1 / 5]),
        np.array([3 / 40, 9 / 40]),
        np.array([44 / 45, -56 / 15, 32 / 9]),
        np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
        np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
    ]
    B = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84])
    E = np.array([-71 / 57600, 0.0, 71 / 16695, -71 / 1920, 17253 / 339200, -22 / 525, 1 / 40])
    P = np.array(
        [
            [1.0, -8048581381 / 2820520608, 8663915743 / 2820520608, -12715105075 / 11282082432],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 131558114200 / 32700410799, -68118460800 / 10900136933, 87487479700 / 32700410799],
            [0.0, -1754552775 / 470086768, 14199869525 / 1410260304, -10690763975 / 1880347072],
            [0.0, 127303824393 / 49829197408, -318862633887 / 49829197408, 701980252875 / 199316789632],
            [0.0, -282668133 / 205662961, 2019193451 / 616988883, -1453857185 / 822651844],
            [0.0, 40617522 / 29380423, -110615467 / 29380423, 69997945 / 29380423],
        ]
    )

    def step(self, fun: RHS, t: float, y: np.ndarray, f: np.ndarray, h: float) -> StepAttempt:
        K = np.empty((7, y.size))
        K[0] = f
        for i, (a_row, c) in enumerate(zip(self.A, self.C[1:]), start=1):
            dy = (K[:i].T @ a_row) * h
            K[i] = fun(t + c * h, y + dy)
        y_new = y + h * (K[:6].T @ self.B)
        f_new = fun(t + h, y_new)
        K[6] = f_new
        error = h * (K.T @ self.E)
        return StepAttempt(y_new=y_new, f_new=f_new, error=error, K=K)

    def dense_coefficients(self, K: np.ndarray) -> np.ndarray:
        return K.T @ self.P


# ─────────────────────────────────────────────────────────────
# Driver
# ─────────────────────────────────────────────────────────────

def _error_norm(error: np.ndarray, y: np.ndarray, y_new: np.ndarray, tol: float) -> float:
    scale = tol + tol * np.maximum(np.abs(y), np.abs(y_new))
    return float(np.sqrt(np.mean((error / scale) ** 2)))


def _initial_step(fun: RHS, t0: float, y0: np.ndarray, f0: np.ndarray,
                  direction: float, span: float, order: int, tol: float) -> float:
    scale = tol + tol * np.abs(y0)
    d0 = float(np.sqrt(np.mean((y0 / scale) ** 2)))
    d1 = float(np.sqrt(np.mean((f0 / scale) ** 2)))
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    h0 = min(h0, span)
    y1 = y0 + h0 * direction * f0
    f1 = fun(t0 + h0 * direction, y1)
    d2 = float(np.sqrt(np.mean(((f1 - f0) / scale) ** 2))) / h0
    if d1 <= 1e-15 and d2 <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** (1.0 / (order + 1))
    return min(100 * h0, h1, span)


def _crossed(g_old: float, g_new: float, direction: int) -> int:
    """Return +1/-1 for a rising/falling crossing admitted by direction, else 0."""
    if g_old < 0.0 <= g_new and direction >= 0:
        return 1
    if g_old > 0.0 >= g_new and direction <= 0:
        return -1
    return 0


def _locate(spec: EventSpec, dense_fn, t_old: float, t_new: float, g_old: float) -> float:
    """Bisection for the zero of spec.fn on the dense interpolant between two accepted steps."""
    lo, hi = t_old, t_new
    g_lo = g_old
    for _ in range(MAX_EVENT_BISECTIONS):
        if abs(hi - lo) <= EVENT_REL_ACCURACY * max(abs(lo), abs(hi), 1.0):
            break
        mid = 0.5 * (lo + hi)
        g_mid = spec.fn(mid, dense_fn(mid))
        if (g_lo < 0.0) == (g_mid < 0.0) and g_mid != 0.0:
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return hi


def integrate(
    fun: RHS,
    t0: float,
    y0: Sequence[float],
    t_end: float,
    tol: float,
    events: Sequence[EventSpec] = (),
    method: Optional[Integrator] = None,
    max_steps: int = 200_000,
) -> IntegrationResult:
    """
    Integrate y' = fun(t, y) from t0 towards t_end (either direction).

    Stops at t_end or at the first terminal event, located on the dense
    output to relative accuracy 1e-12. Non-terminal events before that point
    are recorded in order.

    Raises:
        DomainError: t_end == t0 or tol <= 0.
        StiffnessError: step size underflow or max_steps exhausted.
    """
    if t_end == t0:
        raise DomainError("integration span is empty")
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    method = method or DormandPrince54()
    direction = 1.0 if t_end > t0 else -1.0

    t = float(t0)
    y = np.asarray(y0, dtype=float).copy()
    f = np.asarray(fun(t, y), dtype=float)
    ts: List[float] = [t]
    ys: List[np.ndarray] = [y.copy()]
    seg_t: List[float] = []
    seg_h: List[float] = []
    seg_y: List[np.ndarray] = []
    seg_q: List[np.ndarray] = []
    hits: List[EventHit] = []
    terminal: Optional[EventHit] = None
    g_values = [spec.fn(t, y) for spec in events]

    h_abs = _initial_step(fun, t, y, f, direction, abs(t_end - t), method.error_order, tol)
    err_prev = 1e-4
    rejected_last = False
    n_accepted = n_rejected = 0

    while terminal is None and direction * (t_end - t) > 0:
        if n_accepted + n_rejected >= max_steps:
            raise StiffnessError(
                f"step budget of {max_steps} exhausted at t={t}", {"t": t, "h": h_abs}
            )
        if h_abs < 1e-14 * max(abs(t), 1.0):
            raise StiffnessError(f"step size underflow at t={t}", {"t": t, "h": h_abs})

        h_abs = min(h_abs, abs(t_end - t))
        h = direction * h_abs
        t_new = t_end if h_abs == abs(t_end - t) else t + h
        h = t_new - t

        with np.errstate(over="ignore", invalid="ignore"):
            attempt = method.step(fun, t, y, f, h)
            err = _error_norm(attempt.error, y, attempt.y_new, tol)
        if not np.isfinite(err) or not np.all(np.isfinite(attempt.y_new)):
            h_abs *= MIN_FACTOR
            rejected_last = True
            n_rejected += 1
            continue

        if err > 1.0:
            h_abs *= max(MIN_FACTOR, SAFETY * err ** (-1.0 / (method.error_order + 1)))
            rejected_last = True
            n_rejected += 1
            continue

        # accepted
        n_accepted += 1
        Q = method.dense_coefficients(attempt.K)
        t_old, y_old = t, y
        seg_t.append(t_old)
        seg_h.append(h)
        seg_y.append(y_old)
        seg_q.append(Q)

        def dense_fn(tt: float, _t=t_old, _y=y_old, _h=h, _Q=Q) -> np.ndarray:
            theta = (tt - _t) / _h
            return _y + _h * (_Q @ (theta ** np.arange(1, 5)))

        t, y, f = t_new, attempt.y_new, attempt.f_new

        step_hits: List[Tuple[float, EventHit, EventSpec]] = []
        for i, spec in enumerate(events):
            g_new = spec.fn(t, y)
            crossing = _crossed(g_values[i], g_new, spec.direction)
            if crossing:
                t_ev = _locate(spec, dense_fn, t_old, t, g_values[i])
                y_ev = dense_fn(t_ev)
                if spec.guard is None or spec.guard(t_ev, y_ev):
                    hit = EventHit(name=spec.name, t=float(t_ev), y=y_ev, direction=crossing)
                    step_hits.append((direction * t_ev, hit, spec))
            g_values[i] = g_new
        step_hits.sort(key=lambda item: item[0])
        for _, hit, spec in step_hits:
            hits.append(hit)
            if spec.terminal:
                terminal = hit
                logger.debug(f"terminal event {hit.name} at t={hit.t!r}")
                break

        if terminal is not None:
            if terminal.t != ts[-1]:
                ts.append(terminal.t)
                ys.append(terminal.y.copy())
        else:
            ts.append(t)
            ys.append(y.copy())

        if err == 0.0:
            factor = MAX_FACTOR
        else:
            factor = SAFETY * err ** (-ALPHA) * err_prev**BETA
            factor = min(MAX_FACTOR, max(MIN_FACTOR, factor))
        if rejected_last:
            factor = min(1.0, factor)
        h_abs *= factor
        err_prev = max(err, 1e-4)
        rejected_last = False

    dim = y.size
    dense = (
        DenseOutput(np.array(seg_t), np.array(seg_h), np.array(seg_y), np.array(seg_q))
        if seg_h
        else DenseOutput.empty(dim)
    )
    return IntegrationResult(
        t=np.array(ts),
        y=np.array(ys),
        events=hits,
        terminal=terminal,
        dense=dense,
        n_accepted=n_accepted,
        n_rejected=n_rejected,
    )
