"""
Value types of the linearization at the singular fixed point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..utils.errors import ConsistencyError, DomainError


@dataclass(frozen=True)
class SpectrumData:
    """N-coefficients and the four eigenvalues ν₁..ν₄ of the linearization."""

    N1: float
    N2: float
    N3: float
    nu: Tuple[complex, complex, complex, complex]

    @property
    def discriminant(self) -> float:
        """N₂ − 4√N₃; negative iff ν₃, ν₄ are a complex-conjugate pair."""
        return self.N2 - 4.0 * math.sqrt(self.N3)

    @property
    def complex_pair(self) -> bool:
        return self.discriminant < 0.0

    def to_dict(self) -> dict:
        return {
            "N1": self.N1,
            "N2": self.N2,
            "N3": self.N3,
            "nu": [[z.real, z.imag] for z in self.nu],
            "complex_pair": self.complex_pair,
        }


@dataclass(frozen=True)
class WPoint:
    """Emden–Fowler phase point (w₁..w₄) at log-radius s."""

    s: float
    w1: float
    w2: float
    w3: float
    w4: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.s, self.w1, self.w2, self.w3, self.w4)):
            raise DomainError(f"WPoint entries must be finite: {self}")

    def as_array(self) -> np.ndarray:
        return np.array([self.w1, self.w2, self.w3, self.w4], dtype=float)

    @classmethod
    def from_array(cls, s: float, w) -> "WPoint":
        return cls(float(s), float(w[0]), float(w[1]), float(w[2]), float(w[3]))


@dataclass(frozen=True)
class ZPoint:
    """Phase point shifted by the fixed point: z = w − w⁽⁰⁾."""

    s: float
    z1: float
    z2: float
    z3: float
    z4: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.s, self.z1, self.z2, self.z3, self.z4)):
            raise DomainError(f"ZPoint entries must be finite: {self}")

    def as_array(self) -> np.ndarray:
        return np.array([self.z1, self.z2, self.z3, self.z4], dtype=float)

    @classmethod
    def from_array(cls, s: float, z) -> "ZPoint":
        return cls(float(s), float(z[0]), float(z[1]), float(z[2]), float(z[3]))


@dataclass(frozen=True)
class Nu2Eigenvector:
    """Eigenvector of the most stable eigenvalue ν₂, normalized to t1 = 1."""

    t1: float
    t2: float
    t3: float
    t4: float

    def __post_init__(self):
        if not (self.t1 > 0 and self.t2 < 0 and self.t3 > 0 and self.t4 < 0):
            raise ConsistencyError(
                "nu2 eigenvector violates the (+,-,+,-) sign pattern",
                {"t": [self.t1, self.t2, self.t3, self.t4]},
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.t1, self.t2, self.t3, self.t4], dtype=float)
