import math

import numpy as np
import pytest

from sbe_backend.analysis import (
    asymptotic_lower_radius,
    extremal_lower_bound,
    extremal_regularity_verdict,
    monotone_below_check,
    oscillation_report,
    pointwise_bound_check,
)
from sbe_backend.dynamics import linearized_orbit
from sbe_backend.schemas import BranchPoint, DirichletProfile, Orbit, ProblemParams, WPoint
from sbe_backend.shooting import find_gamma_bar, near_critical_orbit
from sbe_backend.theory import (
    classify_regime,
    critical_exponent_pc,
    critical_sobolev_exponent,
    eigenvalues,
    fixed_point_w0,
    k0,
)
from sbe_backend.utils.errors import DomainError, NotApplicableError, PreconditionError

P = ProblemParams(n=5, p=10)


def orbit_from_w1(params: ProblemParams, s, w1) -> Orbit:
    """Orbit sitting on w⁽⁰⁾ except for the given w1 values."""
    base = fixed_point_w0(params).as_array()
    points = [WPoint(float(si), float(wi), base[1], base[2], base[3]) for si, wi in zip(s, w1)]
    return Orbit(points=points)


def test_verdict_five_ten():
    verdict = extremal_regularity_verdict(P)
    assert verdict.pK0 == pytest.approx(101200 / 6561, rel=1e-12)
    assert verdict.hardy == 1.5625
    assert verdict.p_c is None
    assert verdict.verdict == "ExtremalRegular"


def test_verdict_thirteen():
    assert extremal_regularity_verdict(ProblemParams(n=13, p=2)).pK0 == pytest.approx(1680.0)
    assert extremal_regularity_verdict(ProblemParams(n=13, p=2)).verdict == "ExtremalRegular"
    p_c = critical_exponent_pc(13)
    above = extremal_regularity_verdict(ProblemParams(n=13, p=1.5 * p_c))
    assert above.verdict == "NoConclusion"
    assert above.p_c == pytest.approx(p_c)


@pytest.mark.parametrize("n", range(5, 25))
def test_verdict_matches_regime(n):
    p_s = critical_sobolev_exponent(n)
    for factor in (1.02, 1.4, 2.5, 6.0, 40.0):
        params = ProblemParams(n=n, p=factor * p_s)
        regular = extremal_regularity_verdict(params).verdict == "ExtremalRegular"
        oscillatory = classify_regime(params).tag.value == "OscillatorySupercritical"
        assert regular == oscillatory


def test_linearized_oscillation_counts_crossings():
    orbit = linearized_orbit(P, 1e-6, 30.0, samples=6001)
    report = oscillation_report(P, orbit)
    nu3 = eigenvalues(P).nu[2]
    assert report.sign_changes >= 5
    log_radii = np.log(report.crossing_radii)
    assert np.diff(log_radii) == pytest.approx(np.full(len(log_radii) - 1, math.pi / nu3.imag), rel=0.05)
    assert report.final_ratio == pytest.approx(1.0, abs=1e-5)
    assert report.closest_ratio == pytest.approx(1.0, abs=1e-5)
    assert report.reliable_r_max == pytest.approx(math.exp(30.0))


def test_oscillation_needs_an_approach():
    s = np.linspace(0.0, 3.0, 10)
    far = orbit_from_w1(P, s, 20.0 * np.ones_like(s))
    with pytest.raises(NotApplicableError):
        oscillation_report(P, far)


def test_reliable_window_ends_at_departure():
    c = fixed_point_w0(P).w1
    s = np.linspace(0.0, 10.0, 11)
    w1 = np.array([0.5, 0.9, 1.1, 0.95, 1.02, 0.99, 1.0001, 3.0, 5.0, 10.0, 20.0]) * c
    report = oscillation_report(P, orbit_from_w1(P, s, w1))
    assert report.sign_changes == 5
    assert report.reliable_r_max == pytest.approx(math.exp(7.0))
    assert report.closest_ratio == pytest.approx(1.0001)
    assert report.final_ratio == pytest.approx(3.0)


@pytest.mark.parametrize("fraction", [0.0, -0.5, 1.0])
def test_reliable_fraction_must_be_a_proper_fraction(fraction):
    orbit = linearized_orbit(P, 1e-6, 5.0)
    with pytest.raises(DomainError):
        oscillation_report(P, orbit, reliable_fraction=fraction)


def test_monotone_check_needs_monotone_regime():
    orbit = linearized_orbit(P, 1e-6, 5.0)
    with pytest.raises(PreconditionError):
        monotone_below_check(P, orbit)


def test_monotone_check_on_synthetic_orbits():
    params = ProblemParams(n=13, p=2 * critical_exponent_pc(13))
    c = fixed_point_w0(params).w1
    s = np.linspace(0.0, 5.0, 6)
    below = orbit_from_w1(params, s, c * np.array([0.2, 0.6, 0.9, 0.99, 0.999, 0.9]))
    crossing = orbit_from_w1(params, s, c * np.array([0.2, 0.6, 1.01, 0.99, 0.999, 0.9]))
    assert monotone_below_check(params, below)
    assert not monotone_below_check(params, crossing)


def test_pointwise_bound_on_synthetic_profile():
    x = np.linspace(0.0, 1.0, 11)
    profile = DirichletProfile(x=x, u=np.zeros_like(x), lam=1.0, u_at_one=0.0, du_at_one=0.0)
    point = BranchPoint(gamma=-1.0, R_gamma=1.0, U_at_R=0.5, lam=1.0, u0=1.0)
    report = pointwise_bound_check(P, point, profile, lambda_star_est=1.0)
    assert report.max_value == pytest.approx(1.0)
    assert report.argmax_x == 1.0
    assert report.within_bound

    low_star = pointwise_bound_check(P, point, profile, lambda_star_est=0.1)
    assert not low_star.within_bound
    assert low_star.max_value == pytest.approx(10 ** (1 / 9))


def test_extremal_lower_bound():
    values = extremal_lower_bound(P, 1.0, [1e-3, 0.5, 1.0])
    c = k0(P) ** (1 / 9)
    assert values[0] == pytest.approx(c * (1e-3) ** (-P.a) - 1.0)
    assert values[2] == pytest.approx(c - 1.0)
    assert values[0] > values[1] > values[2]
    with pytest.raises(DomainError):
        extremal_lower_bound(P, 1.0, [0.0, 0.5])
    with pytest.raises(DomainError):
        extremal_lower_bound(P, -1.0, [0.5])


def test_asymptotic_lower_radius_on_synthetic_orbit():
    c = fixed_point_w0(P).w1
    s = np.linspace(0.0, 6.0, 7)
    w1 = c * np.array([0.1, 0.5, 0.97, 0.93, 1.01, 0.999, 3.0])
    orbit = orbit_from_w1(P, s, w1)
    assert asymptotic_lower_radius(P, orbit, 0.1 * c) == pytest.approx(math.exp(2.0))
    assert asymptotic_lower_radius(P, orbit, 0.05 * c) == pytest.approx(math.exp(4.0))
    with pytest.raises(DomainError):
        asymptotic_lower_radius(P, orbit, 0.0)


def test_asymptotic_lower_radius_on_linear_orbit():
    orbit = linearized_orbit(P, 1e-6, 10.0)
    assert asymptotic_lower_radius(P, orbit, 1e-3) == pytest.approx(1.0)


@pytest.mark.slow
def test_near_critical_oscillation_five_ten(params_5_10, gamma_bar_5_10):
    orbit = near_critical_orbit(params_5_10, gamma_bar_5_10)
    report = oscillation_report(params_5_10, orbit)
    assert report.sign_changes >= 2
    # the spiral into w0 decays like exp(Re nu3 * s) from an O(1) deviation at r = 1
    base = fixed_point_w0(params_5_10).as_array()
    closest = int(np.argmin(np.linalg.norm(orbit.w() - base[None, :], axis=1)))
    s_closest = float(orbit.s()[closest])
    decay = eigenvalues(params_5_10).nu[2].real
    assert s_closest > 0
    assert abs(report.closest_ratio - 1.0) <= math.exp(decay * s_closest) + 0.05
    assert report.reliable_r_max > report.crossing_radii[-1]
    lower = asymptotic_lower_radius(params_5_10, orbit, 0.5 * fixed_point_w0(params_5_10).w1)
    assert math.isfinite(lower) and lower > 0


@pytest.mark.slow
def test_near_critical_oscillation_thirteen_two(params_13_2, gamma_bar_13_2):
    report = oscillation_report(params_13_2, near_critical_orbit(params_13_2, gamma_bar_13_2))
    assert report.sign_changes >= 2


@pytest.mark.slow
@pytest.mark.parametrize("n, factor", [(13, 1.05), (25, 2.0)])
def test_monotone_regime_stays_below_singular_solution(n, factor):
    params = ProblemParams(n=n, p=factor * critical_exponent_pc(n))
    orbit = near_critical_orbit(params, find_gamma_bar(params))
    assert monotone_below_check(params, orbit)
    assert oscillation_report(params, orbit).sign_changes == 0
