"""
Closed-form constants and critical exponents.

Sobolev threshold (n+4)/(n-4), the singular-solution constant K₀, the Hardy
constant n²(n-4)²/16, the second critical exponent p_c and the regime
classification built on them.
"""

from __future__ import annotations

from typing import Optional

from ..schemas.params import ProblemParams, Regime, RegimeTag
from ..utils.errors import BracketError, DomainError
from ..utils.logger import get_logger

logger = get_logger(__name__)

# p_c scan: start just above the Sobolev exponent, grow by SCAN_FACTOR up to SCAN_LIMIT
SCAN_START = 1.0001
SCAN_FACTOR = 1.5
SCAN_LIMIT = 1e6
MAX_BISECTIONS = 200


def _check_dimension(n: int) -> None:
    if n < 5:
        raise DomainError(f"dimension must satisfy n >= 5, got n={n}")


def critical_sobolev_exponent(n: int) -> float:
    _check_dimension(n)
    return (n + 4) / (n - 4)


def hardy_constant(n: int) -> float:
    """Optimal constant n²(n-4)²/16 of the second-order Hardy–Rellich inequality."""
    _check_dimension(n)
    return n * n * (n - 4) * (n - 4) / 16.0


def _k0(n: int, p: float) -> float:
    a = 4.0 / (p - 1.0)
    return a * (a + 2.0) * (n - 2.0 - a) * (n - 4.0 - a)


def k0(params: ProblemParams) -> float:
    """K₀ = a(a+2)(n-2-a)(n-4-a) with a = 4/(p-1); positive under supercriticality."""
    return _k0(params.n, params.p)


def k0_times_p_minus_hardy(n: int, p: float) -> float:
    """Signed residual p·K₀(n, p) − n²(n-4)²/16; its unique supercritical root is p_c."""
    return p * _k0(n, p) - hardy_constant(n)


def _rootsearch(f, a: float, factor: float, limit: float):
    """Multiplicative scan from a until f changes sign; returns the bracket or None."""
    x1, f1 = a, f(a)
    while x1 < limit:
        x2 = min(x1 * factor, limit)
        f2 = f(x2)
        if f1 * f2 <= 0.0:
            return x1, x2
        x1, f1 = x2, f2
    return None


def _bisect(f, x1: float, x2: float, tol: float) -> float:
    f1 = f(x1)
    for _ in range(MAX_BISECTIONS):
        if x2 - x1 < tol:
            break
        x3 = 0.5 * (x1 + x2)
        if x3 in (x1, x2):
            break
        f3 = f(x3)
        if f3 == 0.0:
            return x3
        if f1 * f3 < 0.0:
            x2 = x3
        else:
            x1, f1 = x3, f3
    return 0.5 * (x1 + x2)


def critical_exponent_pc(n: int, tol: float = 1e-12) -> Optional[float]:
    """
    Second critical exponent p_c(n).

    Returns None for 5 <= n <= 12, where no p_c exists (p·K₀ stays above the
    Hardy constant for every supercritical p). For n >= 13 the root of
    p·K₀(p) = n²(n-4)²/16 is bracketed by a multiplicative scan and refined
    by bisection until the bracket is narrower than tol.

    Raises:
        DomainError: n < 5 or tol <= 0.
        BracketError: no sign change between the scan start and 1e6.
    """
    _check_dimension(n)
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if n <= 12:
        return None

    def residual(p: float) -> float:
        return k0_times_p_minus_hardy(n, p)

    start = SCAN_START * critical_sobolev_exponent(n)
    bracket = _rootsearch(residual, start, SCAN_FACTOR, SCAN_LIMIT)
    if bracket is None:
        raise BracketError(
            f"no sign change of p*K0 - hardy for n={n}",
            {"n": n, "scan_lo": start, "scan_hi": SCAN_LIMIT},
        )
    p_c = _bisect(residual, bracket[0], bracket[1], tol)
    logger.debug(f"p_c({n}) = {p_c!r} from bracket {bracket}")
    return p_c


def classify_regime(params: ProblemParams) -> Regime:
    p_c = critical_exponent_pc(params.n)
    if p_c is not None and params.p >= p_c:
        return Regime(tag=RegimeTag.MONOTONE, p_c=p_c)
    return Regime(tag=RegimeTag.OSCILLATORY, p_c=p_c)
