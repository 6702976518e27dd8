"""
Shot classification, the critical shooting value and the Dirichlet branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..utils.errors import DomainError


# ---- Shot classes (trichotomy of the Cauchy problem) ----

class ShotClassBase(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: str


class HitsZero(ShotClassBase):
    tag: Literal["HitsZero"] = "HitsZero"
    R1: float = Field(gt=0, description="First zero of U")


class DerivativeVanishes(ShotClassBase):
    tag: Literal["DerivativeVanishes"] = "DerivativeVanishes"
    R_gamma: float = Field(gt=0, description="First zero of U'")
    U_at_R: float = Field(gt=0, lt=1)


class Undetermined(ShotClassBase):
    tag: Literal["Undetermined"] = "Undetermined"
    r_max: float = Field(gt=0)


ShotClass = Union[HitsZero, DerivativeVanishes, Undetermined]


class GammaBar(BaseModel):
    """Final bisection bracket around the critical shooting value γ̄."""

    model_config = ConfigDict(frozen=True)

    lo: float = Field(lt=0, description="Classifies HitsZero")
    hi: float = Field(lt=0, description="Classifies DerivativeVanishes")
    value: float = Field(lt=0)
    iterations: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_bracket(self) -> "GammaBar":
        if not (self.lo < self.value < self.hi < 0):
            raise ValueError(f"invalid bracket lo={self.lo} value={self.value} hi={self.hi}")
        return self

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def rel_width(self) -> float:
        return self.width / abs(self.value)


@dataclass(frozen=True)
class BranchPoint:
    """
    One sample (γ, R_γ, U(R_γ), λ_γ, u_γ(0)) of the Dirichlet bifurcation branch.

    ``w1_peak`` is max over [0, R_γ] of r^{4/(p-1)} U(r); ``offset`` is the
    relative offset δ with γ = γ̄(1 − δ) when the point belongs to a branch.
    """

    gamma: float
    R_gamma: float
    U_at_R: float
    lam: float
    u0: float
    w1_peak: float = float("nan")
    offset: Optional[float] = None

    def __post_init__(self):
        if not self.gamma < 0:
            raise DomainError(f"gamma must be negative, got {self.gamma}")
        if not self.R_gamma > 0:
            raise DomainError(f"R_gamma must be positive, got {self.R_gamma}")
        if not 0 < self.U_at_R < 1:
            raise DomainError(f"U_at_R must lie in (0, 1), got {self.U_at_R}")
        if not self.lam > 0:
            raise DomainError(f"lambda must be positive, got {self.lam}")
        if not math.isclose(self.u0, 1.0 / self.U_at_R - 1.0, rel_tol=1e-12):
            raise DomainError("u0 must equal 1/U_at_R - 1")

    def to_row(self) -> tuple:
        return (self.gamma, self.R_gamma, self.U_at_R, self.lam, self.u0)

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "R_gamma": self.R_gamma,
            "U_at_R": self.U_at_R,
            "lambda": self.lam,
            "u0": self.u0,
            "w1_peak": self.w1_peak,
            "offset": self.offset,
        }


@dataclass
class DirichletProfile:
    """u_γ(x) = U(R_γ x)/U(R_γ) − 1 on a uniform grid of [0, 1]."""

    x: np.ndarray
    u: np.ndarray
    lam: float
    u_at_one: float
    du_at_one: float

    def __post_init__(self):
        if len(self.x) != len(self.u) or len(self.x) < 2:
            raise DomainError("profile grid and values must have equal length >= 2")

    @property
    def u0(self) -> float:
        return float(self.u[0])

    def rows(self) -> List[tuple]:
        return list(zip(self.x.tolist(), self.u.tolist()))


@dataclass
class Branch:
    """Ordered branch points plus the monotonicity violations found while building it."""

    points: List[BranchPoint]
    violations: List[str] = field(default_factory=list)

    @property
    def lambda_star_est(self) -> float:
        """λ̂*: the largest λ met on the computed branch."""
        return max(pt.lam for pt in self.points)

    @property
    def monotone(self) -> bool:
        return not self.violations
