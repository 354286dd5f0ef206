"""Disk validation, asymptotic target terms, and convergence-scan reports.

The headline check: on a validated disk the derivative sequence E^(n)(s0)
must track the target (-1)^(n+1) n! (s0 - 1/2)^(-n-1), i.e. the relative
deviation

    lambda_n = | E^(n)(s0) / ((-1)^n n! (s0 - 1/2)^(-n-1)) + 1 |

must trend to zero. A finite-n harness cannot observe the limit itself, so
the report defines an explicit trusted window (rows where the rounding
noise floor stays below lambda_n / 10), fits a geometric rate to lambda_n
over that window, and flags FAIL when the trend is not decreasing or noise
swamps the signal before n = 20.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .chebyshev import StepFunction
from .closedform import e_derivs_closed
from .errors import (
    DiskCenterError,
    DiskHalfNotContainedError,
    DiskImagBoundError,
    DiskReachesThirdError,
    DomainError,
    InsufficientSieveError,
    InvalidArgumentError,
)
from .mellin import _tail_integral, eta_moments_scan
from .zeta import DEFAULT_ORDER, DEFAULT_TERMS

__all__ = [
    "DiskSpec",
    "ScanRow",
    "ConvergenceReport",
    "validate_disk",
    "target_term",
    "lambda_of",
    "h_coefficient",
    "scan_convergence",
]

# |Im(s0)| + h below this keeps zeta(s) and zeta(2s) zero-free on the disk
# (first nontrivial zero ordinate ~14.13, so 2s stays below 14 with margin)
ZERO_FREE_HEIGHT = 7.0

FIT_START = 5  # lambda rows below this are transient and excluded from the fit
_MIN_FIT_POINTS = 4


@dataclass(frozen=True)
class DiskSpec:
    """A validated (s0, h) pair: the disk contains 1/2, keeps Re > 1/3, Re(s0) > 1."""

    s0: complex
    h: float
    margin_re: float  # min Re over the disk minus 1/3
    contains_half: bool


@dataclass(frozen=True)
class ScanRow:
    n: int
    e_n: complex
    target: complex
    lam: float
    ratio: complex
    noise: float  # noise floor expressed on the lambda scale


@dataclass(frozen=True)
class ConvergenceReport:
    disk: DiskSpec
    rows: list[ScanRow]
    fitted_rate: float  # nan when the trusted window is too short to fit
    trusted_nmax: int
    passed: bool
    failures: list[str]
    route: str
    radius: float
    samples: int
    cross_gaps: list[tuple[int, float, float]] = field(default_factory=list)


def validate_disk(s0: complex, h: float) -> DiskSpec:
    """Check the disk conditions; each failure raises its own named error."""
    s0 = complex(s0)
    h = float(h)
    if h <= 0:
        raise InvalidArgumentError(f"disk radius must be positive, got {h}")
    if abs(s0 - 0.5) >= h:
        raise DiskHalfNotContainedError(
            f"|s0 - 1/2| = {abs(s0 - 0.5):.6g} >= h = {h:.6g}"
        )
    margin = s0.real - h - 1.0 / 3.0
    if margin <= 0:
        raise DiskReachesThirdError(
            f"disk reaches Re <= 1/3 (min Re = {s0.real - h:.6g})"
        )
    if s0.real <= 1.0:
        raise DiskCenterError(f"Re(s0) = {s0.real:.6g} must exceed 1")
    if abs(s0.imag) + h >= ZERO_FREE_HEIGHT:
        raise DiskImagBoundError(
            f"|Im(s0)| + h = {abs(s0.imag) + h:.6g} >= {ZERO_FREE_HEIGHT}"
        )
    return DiskSpec(s0, h, margin, True)


def target_term(n: int, s0: complex) -> complex:
    """(-1)^(n+1) n! (s0 - 1/2)^(-n-1), computed in log space (no n! overflow)."""
    if n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n}")
    w = complex(s0) - 0.5
    if w == 0:
        raise InvalidArgumentError("s0 = 1/2 is the pole itself")
    logmag = math.lgamma(n + 1) - (n + 1) * math.log(abs(w))
    phase = cmath.exp(-1j * (n + 1) * cmath.phase(w))
    sign = -1.0 if n % 2 == 0 else 1.0
    if logmag > 709.0:
        mag = math.inf
    else:
        mag = math.exp(logmag)
    return sign * mag * phase


def lambda_of(E_n: complex, n: int, s0: complex) -> float:
    """Relative deviation of E_n from the target term (sign absorbed)."""
    return abs(E_n / target_term(n, s0) - 1.0)


def h_coefficient(n: int, E_n: complex, s0: complex) -> complex:
    """E^(n)(s0)/n! + (-1)^n (s0 - 1/2)^(-n-1): the regularized-series coefficient."""
    if n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n}")
    w = complex(s0) - 0.5
    first = E_n * math.exp(-math.lgamma(n + 1))
    second = (1.0 if n % 2 == 0 else -1.0) * w ** complex(-n - 1)
    return first + second


def _fit_rate(rows: list[ScanRow], trusted_nmax: int) -> float:
    ns = [r.n for r in rows if FIT_START <= r.n <= trusted_nmax and r.lam > 0]
    if len(ns) < _MIN_FIT_POINTS:
        return math.nan
    ys = [math.log(rows[n].lam) for n in ns]
    slope = np.polyfit(np.asarray(ns, dtype=float), np.asarray(ys), 1)[0]
    return float(math.exp(slope))


def _trusted_prefix(rows: list[ScanRow]) -> int:
    trusted = rows[-1].n
    for r in rows[1:]:  # n = 0 row is always kept
        if not r.noise < r.lam / 10.0:
            trusted = r.n - 1
            break
    return trusted


def _closed_rows(disk: DiskSpec, nmax: int, r: float, M: int, accumulation: str,
                 refine: bool, terms: int, order: int) -> list[ScanRow]:
    values, noise = e_derivs_closed(disk.s0, nmax, r, M, accumulation, terms, order)
    if refine:
        values2, _ = e_derivs_closed(disk.s0, nmax, r, 2 * M, accumulation, terms, order)
        emp = np.abs(values2 - values)
        values = values2
        noise = np.maximum(noise, emp)
    rows = []
    for n in range(nmax + 1):
        tgt = target_term(n, disk.s0)
        rows.append(
            ScanRow(
                n=n,
                e_n=complex(values[n]),
                target=tgt,
                lam=lambda_of(values[n], n, disk.s0),
                ratio=complex(values[n] / tgt),
                noise=float(noise[n] / abs(tgt)),
            )
        )
    return rows


def _integral_feasible_nmax(disk: DiskSpec, nmax: int, X: float) -> int:
    """Largest n <= nmax whose crude truncation tail stays under |target|/4."""
    feasible = -1
    for n in range(nmax + 1):
        crude = 1.04 * _tail_integral(X, n, disk.s0.real - 1.0)
        if crude <= 0.25 * abs(target_term(n, disk.s0)):
            feasible = n
        else:
            break
    return feasible


def _integral_rows(disk: DiskSpec, nmax: int, theta: StepFunction, X: float) -> list[ScanRow]:
    moments = eta_moments_scan(theta, nmax, disk.s0, X)
    rows = []
    for n in range(nmax + 1):
        tgt = target_term(n, disk.s0)
        mv = moments[n]
        rows.append(
            ScanRow(
                n=n,
                e_n=mv.value,
                target=tgt,
                lam=lambda_of(mv.value, n, disk.s0),
                ratio=complex(mv.value / tgt),
                noise=float(mv.tail_empirical / abs(tgt)),
            )
        )
    return rows


def scan_convergence(disk: DiskSpec, nmax: int, r: float, M: int,
                     route: str = "closed",
                     theta: StepFunction | None = None,
                     x_limit: float | None = None,
                     accumulation: str = "double",
                     refine: bool = True,
                     terms: int = DEFAULT_TERMS,
                     order: int = DEFAULT_ORDER) -> ConvergenceReport:
    """Scan n = 0..nmax and report lambda_n, the fitted decay rate, and PASS/FAIL.

    route "closed" extracts all derivatives from one sampling contour;
    "integral" integrates eta directly (needs ``theta`` with enough reach);
    "both" reports the closed rows plus per-n cross-route gaps.
    """
    if route not in ("closed", "integral", "both"):
        raise InvalidArgumentError(f"unknown route {route!r}")
    if nmax < 0:
        raise InvalidArgumentError(f"nmax must be >= 0, got {nmax}")

    cross_gaps: list[tuple[int, float, float]] = []
    if route in ("integral", "both"):
        if theta is None:
            raise InvalidArgumentError(f"route={route!r} requires a theta step function")
        X = float(x_limit if x_limit is not None else theta.limit)
        feasible = _integral_feasible_nmax(disk, nmax, X)
        want = nmax if route == "integral" else min(nmax, 10)
        if feasible < want:
            raise InsufficientSieveError(
                f"sieve limit {X:g} supports the integral route only to n = {feasible}, "
                f"need n = {want}"
            )

    if route == "integral":
        rows = _integral_rows(disk, nmax, theta, X)
    else:
        rows = _closed_rows(disk, nmax, r, M, accumulation, refine, terms, order)
        if route == "both":
            int_rows = _integral_rows(disk, min(nmax, 10), theta, X)
            for irow in int_rows:
                crow = rows[irow.n]
                gap = abs(crow.e_n - irow.e_n)
                budget = (irow.noise + crow.noise) * abs(crow.target)
                cross_gaps.append((irow.n, gap, budget))

    trusted = _trusted_prefix(rows)
    rate = _fit_rate(rows, trusted)
    failures = []
    if not math.isnan(rate) and rate >= 1.0:
        failures.append("lambda-not-decreasing")
    if trusted < min(20, nmax):
        failures.append("noise-swamps-signal-before-n20")
    return ConvergenceReport(
        disk=disk,
        rows=rows,
        fitted_rate=rate,
        trusted_nmax=trusted,
        passed=not failures,
        failures=failures,
        route=route,
        radius=float(r),
        samples=int(M),
        cross_gaps=cross_gaps,
    )
