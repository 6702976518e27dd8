import math

import numpy as np
import pytest

from sbe_backend.dynamics import (
    autonomous_rhs,
    cone_test,
    integrate_autonomous,
    linearized_orbit,
    radial_to_w,
    radial_to_z,
    w_to_radial,
    w_to_z,
    z_to_w,
)
from sbe_backend.integration import integrate_radial
from sbe_backend.schemas import ProblemParams, RadialState, WPoint
from sbe_backend.theory import eigenvalues, eigenvector, fixed_point_w0, k0, linearization_matrix
from sbe_backend.utils.constants import EVENT_W2_ZERO
from sbe_backend.utils.errors import DomainError, PreconditionError

P = ProblemParams(n=5, p=10)


def singular_state(params: ProblemParams, r: float, scale: float = 1.0) -> RadialState:
    a = params.a
    c = k0(params) ** (1.0 / (params.p - 1.0))
    return RadialState(
        r=r,
        U=scale * c * r ** (-a),
        U1=-a * c * r ** (-a - 1),
        U2=a * (a + 1) * c * r ** (-a - 2),
        U3=-a * (a + 1) * (a + 2) * c * r ** (-a - 3),
    )


@pytest.mark.parametrize("r", [0.05, 0.5, 1.0, 2.0, 7.0])
def test_singular_solution_maps_to_fixed_point(r):
    w = radial_to_w(P, singular_state(P, r))
    assert w.s == pytest.approx(math.log(r))
    assert w.as_array() == pytest.approx(fixed_point_w0(P).as_array(), abs=1e-10)
    assert np.max(np.abs(radial_to_z(P, singular_state(P, r)).as_array())) < 1e-10


@pytest.mark.parametrize(
    "state",
    [
        RadialState(0.3, 0.9, -0.2, -1.1, 0.4),
        RadialState(1.0, 1.0, 0.0, -2.0, 0.0),
        RadialState(12.0, 1e-3, -4e-4, 1e-4, -3e-5),
    ],
)
def test_coordinate_round_trip(state):
    back = w_to_radial(P, radial_to_w(P, state))
    assert back.r == pytest.approx(state.r, rel=1e-14)
    assert back.as_array() == pytest.approx(state.as_array(), rel=1e-12, abs=1e-18)


def test_u_prime_zero_iff_w2_zero():
    assert radial_to_w(P, RadialState(2.0, 0.4, 0.0, 0.3, 0.1)).w2 == 0.0
    assert radial_to_w(P, RadialState(2.0, 0.4, -1e-3, 0.3, 0.1)).w2 < 0.0


def test_shift_round_trip():
    w = WPoint(0.7, 1.2, -0.3, 0.9, 2.5)
    z = w_to_z(P, w)
    assert z_to_w(P, z).as_array() == pytest.approx(w.as_array(), abs=1e-15)
    assert z.s == w.s


def test_fixed_point_is_equilibrium():
    assert np.max(np.abs(autonomous_rhs(P, fixed_point_w0(P)))) < 1e-12


def test_jacobian_matches_linearization():
    base = fixed_point_w0(P).as_array()
    M = linearization_matrix(P)
    h = 1e-6
    for j in range(4):
        step = np.zeros(4)
        step[j] = h
        plus = autonomous_rhs(P, WPoint.from_array(0.0, base + step))
        minus = autonomous_rhs(P, WPoint.from_array(0.0, base - step))
        column = (plus - minus) / (2 * h)
        assert column == pytest.approx(M[:, j], abs=1e-6 * P.p * k0(P))
    assert M[3, 0] == pytest.approx(P.p * k0(P))


def test_chain_rule_along_radial_solution():
    traj = integrate_radial(P, singular_state(P, 0.5, scale=1 - 1e-3), 3.0, 1e-12)
    delta = 1e-4
    for r in (0.7, 1.0, 1.6, 2.4):
        s = math.log(r)
        w_plus = radial_to_w(P, RadialState.from_array(r * math.exp(delta), traj.dense(r * math.exp(delta))))
        w_minus = radial_to_w(P, RadialState.from_array(r * math.exp(-delta), traj.dense(r * math.exp(-delta))))
        derivative = (w_plus.as_array() - w_minus.as_array()) / (2 * delta)
        field = autonomous_rhs(P, radial_to_w(P, RadialState.from_array(r, traj.dense(r))))
        assert derivative == pytest.approx(field, abs=1e-6)
        assert w_plus.s == pytest.approx(s + delta)


def test_radial_and_autonomous_runs_agree():
    start = singular_state(P, 0.5, scale=1 - 1e-3)
    traj = integrate_radial(P, start, 3.0, 1e-10)
    orbit = integrate_autonomous(P, radial_to_w(P, start), math.log(3.0), 1e-10)
    assert traj.terminal_event.kind == "ReachedRMax"
    assert orbit.terminal is None
    for r in (0.8, 1.5, 2.2):
        via_w = w_to_radial(P, WPoint.from_array(math.log(r), orbit.dense(math.log(r)))).as_array()
        assert via_w == pytest.approx(traj.dense(r), rel=1e-6)
    assert w_to_radial(P, orbit.final).as_array() == pytest.approx(traj.final.as_array(), rel=1e-6)


def test_zero_norm_threshold_is_rejected():
    with pytest.raises(DomainError):
        integrate_autonomous(P, fixed_point_w0(P), 1.0, 1e-12, norm_threshold=0.0)


def test_equilibrium_is_preserved_over_a_short_span():
    w0 = fixed_point_w0(P)
    orbit = integrate_autonomous(P, w0, 2.0, 1e-12)
    drift = np.max(np.abs(orbit.w() - w0.as_array()[None, :]))
    assert drift < 1e-10


def test_oscillation_near_fixed_point_follows_complex_pair():
    nu3 = eigenvalues(P).nu[2]
    xi3 = eigenvector(P, nu3)
    base = fixed_point_w0(P).as_array()
    epsilon = 1e-7
    orbit = integrate_autonomous(P, WPoint.from_array(0.0, base + epsilon * xi3.real), 5.0, 1e-12)

    s = np.linspace(0.0, 5.0, 5001)
    z1 = np.array([orbit.dense(si)[0] for si in s]) - base[0]
    flips = np.nonzero(np.sign(z1[:-1]) != np.sign(z1[1:]))[0]
    crossings = [s[i] - z1[i] * (s[i + 1] - s[i]) / (z1[i + 1] - z1[i]) for i in flips]
    assert len(crossings) == 2
    half_period = math.pi / nu3.imag
    assert crossings[1] - crossings[0] == pytest.approx(half_period, rel=0.02)

    ratio = abs(orbit.dense(half_period)[0] - base[0]) / epsilon
    assert math.log(ratio) / half_period == pytest.approx(nu3.real, rel=0.1)


def test_unstable_direction_reaches_w2_zero():
    xi1 = eigenvector(P, eigenvalues(P).nu[0]).real
    base = fixed_point_w0(P)
    start = WPoint.from_array(0.0, base.as_array() + 1e-8 * xi1)
    orbit = integrate_autonomous(P, start, 50.0, 1e-12, stop_on=(EVENT_W2_ZERO,))
    assert orbit.terminal == EVENT_W2_ZERO
    assert orbit.final.s < 50.0
    assert orbit.final.w1 > base.w1
    assert orbit.final.w2 == pytest.approx(0.0, abs=1e-9)


def test_linearized_orbit_starts_on_the_complex_mode():
    nu3 = eigenvalues(P).nu[2]
    xi3 = eigenvector(P, nu3)
    orbit = linearized_orbit(P, 1e-6, 10.0, samples=101)
    assert len(orbit.points) == 101
    assert orbit.points[0].as_array() == pytest.approx(
        fixed_point_w0(P).as_array() + 1e-6 * xi3.real, abs=1e-15
    )
    assert orbit.final.s == pytest.approx(10.0)


def test_cone_in_linear_regime_grows_at_nu2_rate():
    plus, minus = cone_test(P, 1e-9, 3.0)
    rate = -eigenvalues(P).nu[1].real
    for report in (plus, minus):
        assert report.pattern_held
        assert report.measured_growth_rate == pytest.approx(rate, rel=0.05)
    assert (plus.direction, minus.direction) == ("+", "-")


def test_cone_holds_into_nonlinear_regime():
    plus, minus = cone_test(P, 1e-6, 5.0)
    floor = P.n - 2 - P.a - 0.1
    for report in (plus, minus):
        assert report.pattern_held
        assert report.measured_growth_rate >= floor
        assert report.steps > 1


@pytest.mark.parametrize("epsilon, s_span", [(1e-3, 5.0), (0.0, 5.0), (1e-6, 0.5)])
def test_cone_preconditions(epsilon, s_span):
    with pytest.raises(PreconditionError):
        cone_test(P, epsilon, s_span)
