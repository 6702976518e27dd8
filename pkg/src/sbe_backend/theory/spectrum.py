"""
Linearization of the autonomous Emden–Fowler system at its fixed point w⁽⁰⁾.

Eigenvalues come from the closed forms in the N-coefficients; the matrix M
is exposed for checks and for the linear surrogate orbit, never used to
compute the spectrum.
"""

from __future__ import annotations

import cmath
import math
from typing import Tuple

import numpy as np

from ..schemas.params import ProblemParams
from ..schemas.spectra import Nu2Eigenvector, SpectrumData, WPoint
from .exponents import k0


def n_coefficients(params: ProblemParams) -> Tuple[float, float, float]:
    n, q = params.n, params.p - 1.0
    N1 = -(n - 4) * q + 8.0
    N2 = (n * n - 4 * n + 8) * q * q
    N3 = (
        (9 * n - 34) * (n - 2) * q**4
        + 8 * (3 * n - 8) * (n - 6) * q**3
        + (16 * n * n - 288 * n + 832) * q**2
        - 128 * (n - 6) * q
        + 256.0
    )
    return float(N1), float(N2), float(N3)


def eigenvalues(params: ProblemParams) -> SpectrumData:
    """
    ν₁..ν₄ from the closed forms with principal square roots.

    When N₂ − 4√N₃ < 0, ν₃ carries the positive and ν₄ the negative imaginary
    part. ν₃, ν₄ are always complex numbers (zero imaginary part otherwise).
    """
    N1, N2, N3 = n_coefficients(params)
    denom = 2.0 * (params.p - 1.0)
    root3 = math.sqrt(N3)
    outer = math.sqrt(N2 + 4.0 * root3)
    inner = cmath.sqrt(complex(N2 - 4.0 * root3, 0.0))
    nu = (
        complex((N1 + outer) / denom),
        complex((N1 - outer) / denom),
        (N1 + inner) / denom,
        (N1 - inner) / denom,
    )
    return SpectrumData(N1=N1, N2=N2, N3=N3, nu=nu)


def characteristic_poly(params: ProblemParams, nu: complex) -> complex:
    a, n = params.a, params.n
    return (
        (nu - a + n - 4) * (nu - a + n - 2) * (nu - a - 2) * (nu - a)
        - params.p * k0(params)
    )


def linearization_matrix(params: ProblemParams) -> np.ndarray:
    a, n = params.a, params.n
    return np.array(
        [
            [a, 1.0, 0.0, 0.0],
            [0.0, a + 2.0, 1.0, 0.0],
            [0.0, 0.0, a - (n - 2), 1.0],
            [params.p * k0(params), 0.0, 0.0, a - (n - 4)],
        ]
    )


def eigenvector(params: ProblemParams, nu: complex) -> np.ndarray:
    """Eigenvector of M for eigenvalue nu, normalized to first component 1 (complex dtype)."""
    a, n = params.a, params.n
    t1 = 1.0 + 0.0j
    t2 = (nu - a) * t1
    t3 = (nu - a - 2.0) * t2
    t4 = (nu - a + n - 2.0) * t3
    return np.array([t1, t2, t3, t4], dtype=complex)


def nu2_eigenvector(params: ProblemParams) -> Nu2Eigenvector:
    """
    Eigenvector of ν₂ with t1 = 1.

    Raises:
        ConsistencyError: the (+,-,+,-) sign pattern fails, which can only
            happen through a wrong eigenvalue.
    """
    nu2 = eigenvalues(params).nu[1].real
    t = eigenvector(params, nu2).real
    return Nu2Eigenvector(*(float(v) for v in t))


def fixed_point_w0(params: ProblemParams) -> WPoint:
    a, n = params.a, params.n
    c = k0(params) ** (1.0 / (params.p - 1.0))
    return WPoint(
        s=0.0,
        w1=c,
        w2=-a * c,
        w3=a * (a + 2.0) * c,
        w4=(n - 2.0 - a) * a * (a + 2.0) * c,
    )
