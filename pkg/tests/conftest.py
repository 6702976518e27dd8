"""Shared fixtures: parameter sets and the expensive shooting objects."""

from __future__ import annotations

import numpy as np
import pytest

from sbe_backend.schemas import ProblemParams
from sbe_backend.shooting import build_branch, estimate_lambda_sigma, find_gamma_bar

# half-decade relative offsets 1e-2 .. 1e-10
BRANCH_OFFSETS = [float(d) for d in np.logspace(-2, -10, 17)]


@pytest.fixture(scope="session")
def params_5_10() -> ProblemParams:
    return ProblemParams(n=5, p=10)


@pytest.fixture(scope="session")
def params_13_2() -> ProblemParams:
    return ProblemParams(n=13, p=2)


@pytest.fixture(scope="session")
def gamma_bar_5_10(params_5_10):
    return find_gamma_bar(params_5_10, rel_tol=1e-13)


@pytest.fixture(scope="session")
def gamma_bar_13_2(params_13_2):
    return find_gamma_bar(params_13_2, rel_tol=1e-13)


@pytest.fixture(scope="session")
def branch_5_10(params_5_10, gamma_bar_5_10):
    return build_branch(params_5_10, BRANCH_OFFSETS, gamma_bar=gamma_bar_5_10, workers=4)


@pytest.fixture(scope="session")
def lambda_sigma_5_10(params_5_10):
    return estimate_lambda_sigma(params_5_10, [1e-6, 1e-7, 1e-8])
