"""
Trajectory value types: radial states, terminal events, dense output and
autonomous orbits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..utils.errors import DomainError
from .spectra import WPoint


@dataclass(frozen=True)
class RadialState:
    """(r, U, U′, U″, U‴) at a positive radius."""

    r: float
    U: float
    U1: float
    U2: float
    U3: float

    def __post_init__(self):
        if not self.r > 0:
            raise DomainError(f"RadialState radius must be positive, got r={self.r}")
        if not all(math.isfinite(v) for v in (self.r, self.U, self.U1, self.U2, self.U3)):
            raise DomainError(f"RadialState entries must be finite: {self}")

    def as_array(self) -> np.ndarray:
        return np.array([self.U, self.U1, self.U2, self.U3], dtype=float)

    @classmethod
    def from_array(cls, r: float, y) -> "RadialState":
        return cls(float(r), float(y[0]), float(y[1]), float(y[2]), float(y[3]))

    def to_row(self) -> tuple:
        return (self.r, self.U, self.U1, self.U2, self.U3)


# ---- Terminal events of a radial integration ----

class EventBase(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str
    r: float = Field(gt=0, description="Radius at which the integration stopped")


class ReachedRMax(EventBase):
    kind: Literal["ReachedRMax"] = "ReachedRMax"


class UCrossedZero(EventBase):
    kind: Literal["UCrossedZero"] = "UCrossedZero"


class UPrimeVanished(EventBase):
    kind: Literal["UPrimeVanished"] = "UPrimeVanished"


class BlowUp(EventBase):
    """Threshold crossing; r is a lower bound for the true blow-up radius."""

    kind: Literal["BlowUp"] = "BlowUp"
    quantity: Literal["U", "derivative"] = "U"


TerminalEvent = Union[ReachedRMax, UCrossedZero, UPrimeVanished, BlowUp]


# ---- Dense output ----

@dataclass
class DenseOutput:
    """
    Piecewise quartic interpolant over accepted steps.

    Segment i covers [t_nodes[i], t_nodes[i] + h[i]] and evaluates
    y_old[i] + h[i] * Q[i] @ (θ, θ², θ³, θ⁴) with θ = (t - t_nodes[i]) / h[i].
    """

    t_nodes: np.ndarray
    h: np.ndarray
    y_old: np.ndarray
    Q: np.ndarray

    @classmethod
    def empty(cls, dim: int) -> "DenseOutput":
        return cls(np.zeros(0), np.zeros(0), np.zeros((0, dim)), np.zeros((0, dim, 4)))

    def __len__(self) -> int:
        return len(self.h)

    @property
    def t_start(self) -> float:
        return float(self.t_nodes[0])

    @property
    def t_stop(self) -> float:
        return float(self.t_nodes[-1] + self.h[-1])

    def covers(self, t: float) -> bool:
        if len(self) == 0:
            return False
        lo, hi = sorted((self.t_start, self.t_stop))
        return lo <= t <= hi

    def __call__(self, t: float) -> np.ndarray:
        if len(self) == 0:
            raise DomainError("dense output has no accepted steps")
        if self.h[0] > 0:
            i = int(np.searchsorted(self.t_nodes, t, side="right")) - 1
        else:
            i = int(np.searchsorted(-self.t_nodes, -t, side="right")) - 1
        i = min(max(i, 0), len(self) - 1)
        theta = (t - self.t_nodes[i]) / self.h[i]
        powers = theta ** np.arange(1, 5)
        return self.y_old[i] + self.h[i] * (self.Q[i] @ powers)


# ---- Trajectories ----

@dataclass
class Trajectory:
    """Accepted radial samples, strictly increasing in r, and the terminal event."""

    states: List[RadialState]
    terminal_event: TerminalEvent
    dense: Optional[DenseOutput] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not self.states:
            raise DomainError("Trajectory needs at least one state")
        radii = [s.r for s in self.states]
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise DomainError("Trajectory radii must be strictly increasing")
        if not math.isclose(self.terminal_event.r, radii[-1], rel_tol=1e-12):
            raise DomainError(
                f"terminal event at r={self.terminal_event.r} does not match "
                f"final state r={radii[-1]}"
            )

    @property
    def final(self) -> RadialState:
        return self.states[-1]

    def radii(self) -> np.ndarray:
        return np.array([s.r for s in self.states])

    def rows(self) -> List[tuple]:
        return [s.to_row() for s in self.states]


@dataclass(frozen=True)
class EventHit:
    """A located event: name, time, state and crossing direction (+1 rising, -1 falling)."""

    name: str
    t: float
    y: np.ndarray = field(compare=False)
    direction: int


@dataclass
class Orbit:
    """Accepted autonomous samples in s, with the events met along the way."""

    points: List[WPoint]
    events: List[EventHit] = field(default_factory=list)
    terminal: Optional[str] = None
    dense: Optional[DenseOutput] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not self.points:
            raise DomainError("Orbit needs at least one point")

    @property
    def final(self) -> WPoint:
        return self.points[-1]

    def s(self) -> np.ndarray:
        return np.array([pt.s for pt in self.points])

    def w(self) -> np.ndarray:
        """Array of shape (len(points), 4)."""
        return np.array([pt.as_array() for pt in self.points])

    def events_named(self, name: str) -> List[EventHit]:
        return [e for e in self.events if e.name == name]

    def rows(self) -> List[tuple]:
        return [(pt.s, pt.w1, pt.w2, pt.w3, pt.w4) for pt in self.points]
