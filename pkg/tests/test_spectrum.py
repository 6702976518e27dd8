import math

import numpy as np
import pytest

from sbe_backend.schemas import Nu2Eigenvector, ProblemParams
from sbe_backend.theory import (
    characteristic_poly,
    critical_exponent_pc,
    critical_sobolev_exponent,
    eigenvalues,
    eigenvector,
    fixed_point_w0,
    k0,
    linearization_matrix,
    n_coefficients,
    nu2_eigenvector,
)
from sbe_backend.utils.errors import ConsistencyError

FACTORS = (1.05, 1.5, 2.0, 3.0, 4.5)
GRID = [
    ProblemParams(n=n, p=f * critical_sobolev_exponent(n))
    for n in range(5, 15)
    for f in FACTORS
]


def test_n_coefficients_five_ten():
    assert n_coefficients(ProblemParams(n=5, p=10)) == (-1.0, 1053.0, 160249.0)


def test_n3_excess_over_leading_term():
    params = ProblemParams(n=5, p=10)
    _, _, N3 = n_coefficients(params)
    assert N3 - 3**2 * 9**4 == pytest.approx(101200.0, rel=1e-14)


@pytest.mark.parametrize("params", GRID)
def test_n3_factorization(params):
    n, p, q = params.n, params.p, params.p - 1.0
    _, _, N3 = n_coefficients(params)
    lhs = N3 - (n - 2) ** 2 * q**4
    rhs = 8 * p * (p + 1) * ((n - 2) * q - 4) * ((n - 4) * q - 4)
    assert lhs == pytest.approx(rhs, rel=1e-10)
    assert lhs > 0


def test_eigenvalues_five_ten():
    spec = eigenvalues(ProblemParams(n=5, p=10))
    nu1, nu2, nu3, nu4 = spec.nu
    assert nu1.real == pytest.approx(2.80663, abs=1e-4)
    assert nu2.real == pytest.approx(-2.91775, abs=1e-4)
    assert nu3.real == pytest.approx(-1 / 18, abs=1e-12)
    assert nu3.imag == pytest.approx(1.30081, abs=1e-4)
    assert nu4 == nu3.conjugate()
    assert spec.complex_pair


@pytest.mark.parametrize("params", GRID)
def test_vieta_and_ordering(params):
    spec = eigenvalues(params)
    nu = np.array(spec.nu)
    q = params.p - 1.0
    assert nu.sum().real == pytest.approx(2 * spec.N1 / q, rel=1e-10)
    assert abs(nu.sum().imag) < 1e-12
    assert np.prod(nu).real == pytest.approx(-q * k0(params), rel=1e-9)

    nu1, nu2, nu3, nu4 = spec.nu
    assert nu1.imag == 0.0 and nu2.imag == 0.0
    assert nu2.real < nu3.real < 0 < nu1.real
    assert nu2.real < nu4.real < 0
    if spec.complex_pair:
        assert nu3.real == nu4.real
        assert nu3.imag > 0 > nu4.imag
    else:
        assert nu4.real <= nu3.real


@pytest.mark.parametrize("params", GRID)
def test_eigenvalues_are_roots_of_characteristic_poly(params):
    scale = params.p * k0(params)
    for nu in eigenvalues(params).nu:
        assert abs(characteristic_poly(params, nu)) < 1e-9 * scale


def test_characteristic_poly_at_zero():
    params = ProblemParams(n=5, p=10)
    assert characteristic_poly(params, 0.0).real == pytest.approx(-9 * 10120 / 6561, rel=1e-12)


@pytest.mark.parametrize("n", [13, 16, 20])
def test_discriminant_changes_sign_at_pc(n):
    p_c = critical_exponent_pc(n)
    below = eigenvalues(ProblemParams(n=n, p=0.999 * p_c))
    above = eigenvalues(ProblemParams(n=n, p=1.001 * p_c))
    assert below.discriminant < 0 and below.complex_pair
    assert above.discriminant > 0 and not above.complex_pair


def test_monotone_regime_has_real_stable_spectrum():
    params = ProblemParams(n=13, p=1.5 * critical_exponent_pc(13))
    spec = eigenvalues(params)
    assert not spec.complex_pair
    assert all(z.imag == 0.0 for z in spec.nu)
    assert spec.nu[3].real <= spec.nu[2].real < 0


def test_nu2_eigenvector_five_ten():
    t = nu2_eigenvector(ProblemParams(n=5, p=10))
    assert t.t1 == 1.0
    assert t.t2 == pytest.approx(-3.3622, abs=1e-3)
    assert t.t3 == pytest.approx(18.029, abs=1e-2)
    assert t.t4 == pytest.approx(-6.530, abs=1e-2)


@pytest.mark.parametrize("params", GRID)
def test_nu2_eigenvector_sign_pattern_and_residual(params):
    t = nu2_eigenvector(params).as_array()
    nu2 = eigenvalues(params).nu[1].real
    M = linearization_matrix(params)
    assert np.linalg.norm(M @ t - nu2 * t) < 1e-9 * np.linalg.norm(nu2 * t)
    assert nu2 + params.n - 2 - params.a < 0


@pytest.mark.parametrize("params", GRID[::7])
def test_eigenvectors_of_all_modes(params):
    M = linearization_matrix(params)
    for nu in eigenvalues(params).nu:
        xi = eigenvector(params, nu)
        assert xi[0] == 1.0
        assert np.linalg.norm(M @ xi - nu * xi) < 1e-9 * np.linalg.norm(nu * xi)


def test_broken_sign_pattern_raises():
    with pytest.raises(ConsistencyError):
        Nu2Eigenvector(1.0, 1.0, 1.0, 1.0)


def test_fixed_point_five_ten():
    w0 = fixed_point_w0(ProblemParams(n=5, p=10))
    c = (10120 / 6561) ** (1 / 9)
    assert w0.w1 == pytest.approx(c, rel=1e-14)
    assert w0.as_array() == pytest.approx([1.0494, -0.4664, 1.1401, 2.9136], abs=5e-4)


@pytest.mark.parametrize("params", GRID[::5])
def test_fixed_point_from_singular_constant(params):
    w0 = fixed_point_w0(params)
    c = k0(params) ** (1.0 / (params.p - 1.0))
    a, n = params.a, params.n
    assert w0.w1 == pytest.approx(c)
    assert w0.w2 == pytest.approx(-a * c)
    assert w0.w3 == pytest.approx(a * (a + 2) * c)
    assert w0.w4 == pytest.approx((n - 2 - a) * a * (a + 2) * c)
    assert math.isfinite(w0.w4)


def test_spectrum_to_dict_round_numbers():
    data = eigenvalues(ProblemParams(n=5, p=10)).to_dict()
    assert data["N2"] == 1053.0
    assert data["complex_pair"] is True
    assert len(data["nu"]) == 4
