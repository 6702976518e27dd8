"""
Report models of the cone test and the analysis diagnostics.
These are also the JSON payloads of the CLI.
"""

from __future__ import annotations

import math
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ConeReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    direction: Literal["+", "-"]
    s_span: float = Field(gt=0)
    pattern_held: bool
    measured_growth_rate: Optional[float] = Field(
        default=None, description="Backward exponential rate of |z1|"
    )
    steps: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _rate_finite(self) -> "ConeReport":
        if self.pattern_held and (
            self.measured_growth_rate is None or not math.isfinite(self.measured_growth_rate)
        ):
            raise ValueError("measured_growth_rate must be finite when the pattern held")
        return self


class OscillationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    sign_changes: int = Field(ge=0)
    crossing_radii: List[float] = Field(default_factory=list)
    final_ratio: float
    reliable_r_max: float = Field(gt=0)
    closest_ratio: float

    @model_validator(mode="after")
    def _check_crossings(self) -> "OscillationReport":
        radii = self.crossing_radii
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("crossing_radii must be strictly increasing")
        if self.sign_changes != len(radii):
            raise ValueError("sign_changes must equal the number of crossing radii")
        return self


class RegularityVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    pK0: float = Field(gt=0)
    hardy: float = Field(gt=0)
    p_c: Optional[float] = None
    verdict: Literal["ExtremalRegular", "NoConclusion"]


class PointwiseBoundReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_value: float
    argmax_x: float = Field(ge=0, le=1)
    bound: float = Field(default=1.05, gt=0)
    within_bound: bool
