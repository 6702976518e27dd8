"""
CLI configuration and the JSON summaries printed on stdout.

Each summary model has a published schema under schemas/v1/.
"""

from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

Command = Literal["pc", "spectrum", "shoot", "branch", "oscillate", "verdict", "plot"]
PlotKind = Literal["trajectory", "bifurcation", "phase"]

_NEEDS_N = {"pc", "spectrum", "shoot", "branch", "oscillate", "verdict"}
_NEEDS_P = {"spectrum", "shoot", "branch", "oscillate", "verdict"}


class RunConfig(BaseModel):
    """Validated flags of one CLI invocation."""

    command: Command
    n: Optional[int] = Field(default=None, ge=5)
    p: Optional[float] = Field(default=None, gt=1.0)
    gamma: Optional[float] = Field(default=None, lt=0)
    tol: float = Field(default=1e-12, gt=0, lt=1e-2)
    r_max: float = Field(default=1e3, gt=0)
    offsets: List[float] = Field(default_factory=list)
    epsilons: List[float] = Field(default_factory=list)
    workers: int = Field(default=1, ge=1)
    kind: Optional[PlotKind] = None
    input: Optional[str] = None
    reference: Optional[float] = None
    output_dir: str = "runs"

    @model_validator(mode="after")
    def _check_command_fields(self) -> "RunConfig":
        if self.command in _NEEDS_N and self.n is None:
            raise ValueError(f"'{self.command}' needs --n")
        if self.command in _NEEDS_P and self.p is None:
            raise ValueError(f"'{self.command}' needs --p")
        if self.command == "shoot" and self.gamma is None:
            raise ValueError("'shoot' needs --gamma")
        if self.command == "plot" and (self.input is None or self.kind is None):
            raise ValueError("'plot' needs --input and --kind")
        if any(not d > 0 for d in self.offsets):
            raise ValueError("offsets must be positive")
        if any(not 1e-10 <= e <= 1e-6 for e in self.epsilons):
            raise ValueError("epsilons must lie in [1e-10, 1e-6]")
        return self


class PcSummary(BaseModel):
    n: int
    p_sobolev: float
    p_c: Optional[float] = None


class SpectrumSummary(BaseModel):
    n: int
    p: float
    N1: float
    N2: float
    N3: float
    nu: List[List[float]]
    complex_pair: bool
    w0: List[float]
    nu2_eigenvector: List[float]
    regime: str


class ShotSummary(BaseModel):
    n: int
    p: float
    gamma: float
    classification: Literal["HitsZero", "DerivativeVanishes", "Undetermined"]
    radius: float
    U_at_R: Optional[float] = None
    lambda_gamma: Optional[float] = None
    u0: Optional[float] = None
    trajectory_csv: str
    orbit_csv: Optional[str] = None


class BranchSummary(BaseModel):
    gamma_bar: float
    bracket: List[float]
    lambda_sigma: float
    lambda_sigma_branch: Optional[float] = None
    lambda_star_est: float
    points: int
    violations: List[str] = Field(default_factory=list)


class OscillateSummary(BaseModel):
    sign_changes: int
    crossing_radii: List[float]
    final_ratio: float
    reliable_r_max: float
    closest_ratio: float
    regime: str
    monotone_below: Optional[bool] = None


class PlotSummary(BaseModel):
    kind: PlotKind
    path: str
    points: int
