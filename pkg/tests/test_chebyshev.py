"""Step functions: construction, evaluation conventions, and identities."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from etamoments.chebyshev import (
    build_delta,
    build_psi,
    build_theta,
    eta_at,
    eval_step,
    eval_step_many,
)
from etamoments.errors import DomainError, InvalidArgumentError
from etamoments.primes import mangoldt_jumps, sieve_primes

THETA_10 = math.log(2 * 3 * 5 * 7)  # 5.34710753...
PSI_10 = 3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7)


@pytest.fixture(scope="module")
def small():
    table = sieve_primes(100)
    theta = build_theta(table)
    psi = build_psi(mangoldt_jumps(100), 100)
    return theta, psi, build_delta(psi, theta)


def test_theta_small_values(small):
    theta, _, _ = small
    assert eval_step(theta, 10) == pytest.approx(THETA_10, rel=1e-14)
    assert eval_step(theta, 10.5) == pytest.approx(THETA_10, rel=1e-14)


def test_theta_smallest():
    theta = build_theta(sieve_primes(2))
    assert theta.abscissas.tolist() == [2]
    assert eval_step(theta, 2) == pytest.approx(math.log(2))


def test_theta_1e6_against_direct_sum(theta_1e6, table_1e6):
    direct = math.fsum(math.log(int(p)) for p in table_1e6.primes)
    assert eval_step(theta_1e6, 10**6) == pytest.approx(direct, abs=1e-7)
    assert direct == pytest.approx(998484.175, abs=0.01)
    assert theta_1e6.abscissas.size == len(table_1e6)


def test_psi_values(small):
    _, psi, _ = small
    assert eval_step(psi, 10) == pytest.approx(PSI_10, rel=1e-14)
    assert eval_step(psi, 2) == pytest.approx(math.log(2), rel=1e-15)
    assert eval_step(psi, 100) == pytest.approx(94.04531122, abs=1e-7)


def test_psi_dominates_theta(small):
    theta, psi, _ = small
    for t in np.linspace(1, 100, 397):
        assert eval_step(psi, t) >= eval_step(theta, t) - 1e-12


def test_delta_values(small):
    _, _, delta = small
    assert eval_step(delta, 10) == pytest.approx(math.log(12), rel=1e-13)
    assert eval_step(delta, 3.9) == 0.0
    assert eval_step(delta, 4) == pytest.approx(math.log(2), rel=1e-14)
    # delta(10) = theta(sqrt(10)) + theta(10^(1/3)) = log 6 + log 2
    assert eval_step(delta, 10) == pytest.approx(math.log(6) + math.log(2), rel=1e-13)


def test_delta_jumps_only_at_proper_prime_powers(small):
    _, _, delta = small
    assert delta.abscissas.tolist() == [4, 8, 9, 16, 25, 27, 32, 49, 64, 81]
    assert np.all(np.diff(delta.cumulative) > 0)


def test_delta_rejects_mismatched_limits(small):
    theta50 = build_theta(sieve_primes(50))
    _, psi, _ = small
    with pytest.raises(InvalidArgumentError):
        build_delta(psi, theta50)


def test_eval_step_conventions(small):
    theta, psi, _ = small
    assert eval_step(psi, 1.5) == 0.0
    # right-continuity: the jump at 7 is included at t = 7
    assert eval_step(theta, 7) == pytest.approx(THETA_10, rel=1e-14)
    assert eval_step(theta, 6.999999) == pytest.approx(math.log(30), rel=1e-14)


def test_eval_step_domain_errors(small):
    theta, _, _ = small
    with pytest.raises(DomainError):
        eval_step(theta, 0.5)
    with pytest.raises(DomainError):
        eval_step(theta, 101)
    with pytest.raises(DomainError):
        eval_step_many(theta, np.array([1.0, 200.0]))


@settings(max_examples=60, deadline=None)
@given(st.floats(1.0, 100.0))
def test_eval_step_piecewise_constant(small, t):
    # value at t equals the value at the last integer jump point <= t
    theta, _, _ = small
    jumps = theta.abscissas[theta.abscissas <= t]
    expected = 0.0 if jumps.size == 0 else math.fsum(
        math.log(int(p)) for p in jumps
    )
    assert eval_step(theta, t) == pytest.approx(expected, rel=1e-13, abs=1e-13)


def test_eta_values(small):
    theta, _, _ = small
    assert eta_at(theta, 1) == -1.0
    assert eta_at(theta, 2) == pytest.approx(math.log(2) - 2, rel=1e-14)
    assert eta_at(theta, 10.5) == pytest.approx(THETA_10 - 10, rel=1e-13)


def test_eta_jump_structure(small):
    # eta(n) - eta(n - eps) = -1 + (log n if n prime else 0)
    theta, _, _ = small
    eps = 1e-9
    for n, bump in [(7, math.log(7)), (8, 0.0), (9, 0.0), (11, math.log(11))]:
        jump = eta_at(theta, n) - eta_at(theta, n - eps)
        assert jump == pytest.approx(-1 + bump, abs=1e-7)


def test_psi_equals_theta_plus_delta_everywhere(small):
    theta, psi, delta = small
    pts = psi.abscissas.astype(np.float64)
    gap = eval_step_many(psi, pts) - eval_step_many(theta, pts) - eval_step_many(delta, pts)
    assert np.max(np.abs(gap)) < 1e-12


def _integer_root(x: int, k: int) -> int:
    r = round(x ** (1.0 / k))
    while (r + 1) ** k <= x:
        r += 1
    while r**k > x:
        r -= 1
    return r


def test_delta_equals_sum_of_theta_roots(theta_1e6, delta_1e6, rng):
    # delta(X) = sum_{k >= 2} theta(X^(1/k)), exact identity per prime power
    for X in rng.integers(4, 10**6, size=60):
        X = int(X)
        total = 0.0
        k = 2
        while 2**k <= X:
            r = _integer_root(X, k)
            if r >= 2:
                total += eval_step(theta_1e6, r)
            k += 1
        assert eval_step(delta_1e6, X) == pytest.approx(total, abs=1e-8)


def test_delta_growth_sanity(delta_1e6):
    for X in np.geomspace(100, 10**6, 40):
        assert eval_step(delta_1e6, X) <= 3 * math.sqrt(X) * math.log(X)


def test_cumulative_monotone(theta_1e6, psi_1e6):
    assert np.all(np.diff(theta_1e6.cumulative) > 0)
    assert np.all(np.diff(psi_1e6.cumulative) > 0)
    assert theta_1e6.cumulative[0] == pytest.approx(math.log(2))
