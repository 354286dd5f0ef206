"""Euler-Maclaurin zeta values against direct-series and Lambda-series oracles.

Frozen reference digits were produced by the bracket oracles below (partial
sum plus integral tail bound) and cross-checked against mpmath at 30 digits.
"""

import math

import numpy as np
import pytest

from etamoments.errors import DomainError, InvalidArgumentError, PoleError
from etamoments.primes import mangoldt_jumps
from etamoments.zeta import lemma1_lhs, log_deriv, zeta_derivative, zeta_value

ZETA_2 = 1.6449340668482264
ZETA_3 = 1.2020569031595943
ZETA_HALF = -1.4603545088095868
DZETA_2 = -0.9375482543158438
DZETA_3 = -0.1981262428856369
DZETA_4 = -0.0689112658961254
LOGD_2 = -0.5699609930945328
LOGD_4 = -0.0636697649553711
LHS_2 = -0.5374865368768468
LHS_3 = -0.3457447403337723


def test_zeta_2_against_series_bracket():
    # remainder of sum n^-2 over n > N lies between 1/(N+1) and 1/N
    N = 10**6
    partial = float(np.sum(np.arange(1, N + 1, dtype=np.float64) ** -2.0))
    val = zeta_value(2.0).real
    assert partial + 1 / (N + 1) - 1e-12 <= val <= partial + 1 / N + 1e-12
    assert val == pytest.approx(ZETA_2, abs=1e-12)


def test_zeta_3_against_series_bracket():
    N = 10**5
    partial = float(np.sum(np.arange(1, N + 1, dtype=np.float64) ** -3.0))
    val = zeta_value(3.0).real
    assert partial + 0.5 / (N + 1) ** 2 - 1e-13 <= val <= partial + 0.5 / N**2 + 1e-13
    assert val == pytest.approx(ZETA_3, abs=1e-12)


def test_zeta_half_two_settings_agree():
    a = zeta_value(0.5, terms=64, bernoulli_order=8)
    b = zeta_value(0.5, terms=256, bernoulli_order=10)
    assert abs(a - b) < 1e-10
    assert a.real == pytest.approx(ZETA_HALF, abs=1e-12)


def test_zeta_derivative_against_series():
    # sum -log n / n^2 with integral tail bracket
    N = 10**6
    n = np.arange(2, N + 1, dtype=np.float64)
    partial = -float(np.sum(np.log(n) / n**2))
    # remainder -int_N^inf log t/t^2 dt = -(log N + 1)/N with O(log N/N^2) slack
    tail = -(math.log(N) + 1) / N
    val = zeta_derivative(2.0).real
    assert val == pytest.approx(partial + tail, abs=1e-4 / N)
    assert val == pytest.approx(DZETA_2, abs=1e-12)
    assert zeta_derivative(3.0).real == pytest.approx(DZETA_3, abs=1e-12)
    assert zeta_derivative(4.0).real == pytest.approx(DZETA_4, abs=1e-12)


def test_zeta_derivative_central_difference():
    h = 1e-5
    fd = (zeta_value(2 + h) - zeta_value(2 - h)) / (2 * h)
    assert abs(fd - zeta_derivative(2.0)) < 1e-8


def test_log_deriv_against_mangoldt_series():
    # F(2) = -zeta'/zeta(2) = sum Lambda(n)/n^2; truncation corrected by 1/N
    pos, wts = mangoldt_jumps(10**6)
    t = pos.astype(np.float64)
    partial = float(np.sum(wts / t**2))
    F2 = -log_deriv(2.0).real
    assert F2 == pytest.approx(partial + 1e-6, abs=1e-8)
    assert -F2 == pytest.approx(LOGD_2, abs=1e-12)

    partial4 = float(np.sum(wts / t**4))
    F4 = -log_deriv(4.0).real
    assert F4 == pytest.approx(partial4, abs=1e-12)  # tail ~ log(N)/N^3
    assert -F4 == pytest.approx(LOGD_4, abs=1e-12)


def test_lemma1_lhs_values():
    assert lemma1_lhs(2.0).real == pytest.approx(LHS_2, abs=1e-12)
    assert lemma1_lhs(3.0).real == pytest.approx(LHS_3, abs=1e-12)
    # composition agrees with components
    composed = (-1 / 3) * (log_deriv(3.0) + zeta_value(3.0))
    assert lemma1_lhs(3.0) == pytest.approx(composed, rel=1e-14)


def test_lemma1_lhs_algebraic_rearrangement():
    for s in (2.0, 3.0, 1.3 + 0.7j):
        lhs = lemma1_lhs(s)
        assert lhs * (-s) - zeta_value(s) == pytest.approx(log_deriv(s), rel=1e-12)


def test_conjugate_symmetry():
    for s in (2 + 1j, 0.8 + 3j, 1.5 + 0.25j):
        assert zeta_value(np.conj(s)) == pytest.approx(np.conj(zeta_value(s)), rel=1e-14)
        assert zeta_derivative(np.conj(s)) == pytest.approx(
            np.conj(zeta_derivative(s)), rel=1e-14
        )
        assert lemma1_lhs(np.conj(s)) == pytest.approx(np.conj(lemma1_lhs(s)), rel=1e-14)


def test_doubling_terms_self_consistency():
    for s in (0.6, 2.0, 0.5 + 7j, 4.0 - 2j):
        assert abs(zeta_value(s, terms=64) - zeta_value(s, terms=128)) < 1e-12


def test_finite_on_validated_disk():
    # numerical witness to analyticity: finite at every sampled point of the
    # default disk (center 3, radius 2.55, boundary ring plus interior grid)
    phis = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    for rho in (0.5, 1.5, 2.54):
        pts = 3.0 + rho * np.exp(1j * phis)
        vals = lemma1_lhs(pts)
        assert np.all(np.isfinite(vals))


def test_domain_errors():
    with pytest.raises(PoleError):
        zeta_value(1.0)
    with pytest.raises(DomainError):
        zeta_value(0.3)
    with pytest.raises(DomainError):
        zeta_value(0.8 + 9j)  # critical strip, too high
    zeta_value(2.0 + 9j)  # fine: right of the strip
    with pytest.raises(DomainError):
        zeta_value(3.0 + 300j)
    with pytest.raises(DomainError):
        zeta_value(complex(math.nan, 0.0))


def test_parameter_validation():
    with pytest.raises(InvalidArgumentError):
        zeta_value(2.0, terms=5)
    with pytest.raises(InvalidArgumentError):
        zeta_value(2.0, bernoulli_order=1)
    with pytest.raises(InvalidArgumentError):
        zeta_value(2.0, bernoulli_order=13)


def test_vectorized_matches_scalar():
    pts = np.array([2.0 + 0j, 3.0 + 1j, 0.7 + 2j])
    vec = zeta_value(pts)
    for i, s in enumerate(pts):
        assert vec[i] == pytest.approx(zeta_value(complex(s)), rel=1e-15)
