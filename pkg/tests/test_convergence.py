"""Disk validation, target terms, lambda rows, and the convergence report."""

import math

import numpy as np
import pytest

from etamoments.closedform import e_closed
from etamoments.convergence import (
    ConvergenceReport,
    h_coefficient,
    lambda_of,
    scan_convergence,
    target_term,
    validate_disk,
)
from etamoments.errors import (
    DiskCenterError,
    DiskHalfNotContainedError,
    DiskImagBoundError,
    DiskReachesThirdError,
    InsufficientSieveError,
    InvalidArgumentError,
)

E_2 = -0.5759214787397308
E_3 = -0.3504331158718813
LAMBDA0_S2 = 0.1361177818904038
H0_S2 = 0.0907451879269358


def test_validate_disk_accepts_reference_disks():
    d = validate_disk(3.0, 2.55)
    assert d.contains_half
    assert d.margin_re == pytest.approx(3.0 - 2.55 - 1 / 3)
    # the q = 0.01, q' = 0.02 family: s0 = 1 + q, h = 1/2 + q'
    d2 = validate_disk(1.01, 0.52)
    assert d2.contains_half and d2.margin_re > 0


def test_validate_disk_named_rejections():
    with pytest.raises(DiskReachesThirdError):
        validate_disk(2.0, 3.0)
    with pytest.raises(DiskHalfNotContainedError):
        validate_disk(3.0, 2.5)  # |3 - 1/2| = 2.5 needs h > 2.5
    with pytest.raises(DiskCenterError):
        validate_disk(0.9, 0.5)
    with pytest.raises(DiskImagBoundError):
        validate_disk(8 + 1j, 7.6)
    with pytest.raises(InvalidArgumentError):
        validate_disk(3.0, -1.0)


def test_validate_disk_rejects_third_touch():
    # any disk reaching Re = 1/3 must be rejected
    with pytest.raises(DiskReachesThirdError):
        validate_disk(1.01, 1.01 - 1 / 3)


def test_target_term_values():
    assert target_term(0, 2.0) == pytest.approx(-2 / 3, rel=1e-14)
    assert target_term(1, 2.0) == pytest.approx(4 / 9, rel=1e-14)
    assert target_term(3, 3.0) == pytest.approx(0.1536, rel=1e-14)


def test_target_term_sign_alternation():
    for s0 in (2.0, 3.0, 2 + 1j):
        for n in range(0, 40, 3):
            ratio = target_term(n + 1, s0) / target_term(n, s0)
            assert ratio == pytest.approx(-(n + 1) / (s0 - 0.5), rel=1e-12)


def test_target_term_log_space_beyond_factorial_overflow():
    # 171! overflows float64; the log-space form stays finite up to ~n = 235
    v170, v171 = target_term(170, 3.0), target_term(171, 3.0)
    assert math.isfinite(v170.real) and math.isfinite(v171.real)
    assert v171 / v170 == pytest.approx(-171 / 2.5, rel=1e-12)
    with pytest.raises(OverflowError):
        float(math.factorial(171))


def test_lambda_of_values():
    assert lambda_of(E_2, 0, 2.0) == pytest.approx(LAMBDA0_S2, abs=1e-12)
    assert lambda_of(target_term(7, 3.0), 7, 3.0) == 0.0
    assert lambda_of(0.0, 5, 3.0) == 1.0


def test_h_coefficient_values():
    assert h_coefficient(0, E_2, 2.0).real == pytest.approx(H0_S2, abs=1e-12)
    # |h_n| = lambda_n |s0 - 1/2|^(-n-1) to rounding
    for n, E_n in [(0, E_2), (3, 0.17), (9, -41.0)]:
        lhs = abs(h_coefficient(n, E_n, 2.0))
        rhs = lambda_of(E_n, n, 2.0) * 1.5 ** (-n - 1)
        assert lhs == pytest.approx(rhs, rel=1e-12)


@pytest.fixture(scope="module")
def headline_report() -> ConvergenceReport:
    disk = validate_disk(3.0, 2.55)
    return scan_convergence(disk, 80, 2.2, 512)


def test_scan_headline(headline_report):
    rep = headline_report
    assert rep.passed and not rep.failures
    assert rep.trusted_nmax == 80
    assert 0.90 <= rep.fitted_rate <= 0.97
    assert [r.n for r in rep.rows] == list(range(81))


def test_scan_rows_definitional_identities(headline_report):
    for r in headline_report.rows:
        assert r.ratio == pytest.approx(r.e_n / r.target, rel=1e-12)
        assert r.lam == pytest.approx(abs(r.ratio - 1.0), rel=1e-12)
        h = h_coefficient(r.n, r.e_n, 3.0)
        assert abs(h) == pytest.approx(r.lam * 2.5 ** (-r.n - 1), rel=1e-9, abs=1e-300)


def test_scan_trend_over_trusted_window(headline_report):
    # the regularized coefficients |h_n| |1/2 - s0|^n trend to zero:
    # equivalent to a negative fitted slope for lambda_n
    lam = [r.lam for r in headline_report.rows]
    ns = np.arange(5, 81)
    slope = np.polyfit(ns, np.log([lam[n] for n in ns]), 1)[0]
    assert slope < 0
    assert headline_report.fitted_rate == pytest.approx(math.exp(slope), rel=1e-12)
    # tail decays at the singularity-analysis rate 0.9375 +- 0.01
    tail_rate = (lam[80] / lam[60]) ** (1 / 20)
    assert tail_rate == pytest.approx(0.9375, abs=0.01)


def test_scan_first_row_matches_closed_form(headline_report):
    assert headline_report.rows[0].e_n == pytest.approx(complex(e_closed(3.0)), rel=1e-11)
    assert headline_report.rows[0].lam == pytest.approx(0.1239172, abs=1e-6)


def test_scan_single_row():
    disk = validate_disk(2.0, 1.6)
    rep = scan_convergence(disk, 0, 1.3, 256)
    assert len(rep.rows) == 1
    assert rep.rows[0].lam == pytest.approx(LAMBDA0_S2, abs=1e-9)
    assert math.isnan(rep.fitted_rate)
    assert rep.passed  # nothing to fit, nothing failed


def test_scan_integral_route(theta_1e6):
    disk = validate_disk(3.0, 2.55)
    rep = scan_convergence(disk, 8, 2.2, 256, route="integral",
                           theta=theta_1e6, x_limit=10**6)
    closed = scan_convergence(disk, 8, 2.2, 256)
    for ri, rc in zip(rep.rows, closed.rows):
        assert ri.e_n == pytest.approx(rc.e_n, rel=1e-6)
    assert rep.route == "integral"


def test_scan_route_both_gaps(theta_1e6):
    disk = validate_disk(3.0, 2.55)
    rep = scan_convergence(disk, 30, 2.2, 256, route="both",
                           theta=theta_1e6, x_limit=10**6)
    assert len(rep.cross_gaps) == 11  # n <= 10 compared
    for n, gap, budget in rep.cross_gaps:
        assert gap <= budget + 1e-12


def test_scan_insufficient_sieve(theta_1e6):
    disk = validate_disk(3.0, 2.55)
    with pytest.raises(InsufficientSieveError):
        scan_convergence(disk, 40, 2.2, 256, route="integral",
                         theta=theta_1e6, x_limit=10**4)


def test_scan_complex_center_supported():
    # complex centers are allowed; no frozen expectations, just sane rows
    disk = validate_disk(2 + 0.5j, 1.6)
    rep = scan_convergence(disk, 16, 1.4, 128, refine=False)
    lams = np.array([r.lam for r in rep.rows])
    assert np.all(np.isfinite(lams)) and np.all(lams < 10)
    assert all(np.isfinite(r.e_n.real) and np.isfinite(r.e_n.imag) for r in rep.rows)


def test_scan_requires_theta_for_integral():
    disk = validate_disk(3.0, 2.55)
    with pytest.raises(InvalidArgumentError):
        scan_convergence(disk, 5, 2.2, 256, route="integral")
    with pytest.raises(InvalidArgumentError):
        scan_convergence(disk, 5, 2.2, 256, route="nonsense")
