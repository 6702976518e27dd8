"""
Problem parameters and regime classification for
Δ²u = λ(1+u)^p on the unit ball of R^n.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ProblemParams(BaseModel):
    """Dimension n and exponent p, with supercriticality certified on construction."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=5, description="Space dimension")
    p: float = Field(gt=1.0, description="Exponent of the nonlinearity")

    @model_validator(mode="after")
    def _check_supercritical(self) -> "ProblemParams":
        p_sobolev = (self.n + 4) / (self.n - 4)
        if not self.p > p_sobolev:
            raise ValueError(
                f"p={self.p} is not supercritical for n={self.n} (needs p > {p_sobolev})"
            )
        return self

    @property
    def a(self) -> float:
        """Decay exponent 4/(p-1) of the singular solution."""
        return 4.0 / (self.p - 1.0)


class RegimeTag(str, Enum):
    OSCILLATORY = "OscillatorySupercritical"
    MONOTONE = "MonotoneSupercritical"


class Regime(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: RegimeTag
    p_c: Optional[float] = Field(default=None, gt=0, description="Absent when 5 <= n <= 12")
