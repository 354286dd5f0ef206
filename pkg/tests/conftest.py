"""Shared fixtures: sieves and step functions built once per session."""

import numpy as np
import pytest

from etamoments.chebyshev import build_delta, build_psi, build_theta
from etamoments.primes import mangoldt_jumps, sieve_primes


@pytest.fixture(scope="session")
def table_1e6():
    return sieve_primes(10**6)


@pytest.fixture(scope="session")
def theta_1e6(table_1e6):
    return build_theta(table_1e6)


@pytest.fixture(scope="session")
def psi_1e6():
    return build_psi(mangoldt_jumps(10**6), 10**6)


@pytest.fixture(scope="session")
def delta_1e6(psi_1e6, theta_1e6):
    return build_delta(psi_1e6, theta_1e6)


@pytest.fixture(scope="session")
def theta_1e7():
    return build_theta(sieve_primes(10**7))


@pytest.fixture(scope="session")
def delta_1e7(theta_1e7):
    psi = build_psi(mangoldt_jumps(10**7), 10**7)
    return build_delta(psi, theta_1e7)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
