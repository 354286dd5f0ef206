"""Truncated Mellin moments of step functions, exact per interval.

The building block is the closed form of

    I_n(a, b; s) = integral_a^b (log t)^n t^(-s-1) dt,

obtained from the reduction I_n = [-(log t)^n t^(-s)/s]_a^b + (n/s) I_{n-1}.
A step function is integrated by summing value * I_n over its constancy
intervals, so the only error sources are truncation at X and rounding;
there is no discretization error.

Every moment is returned as a :class:`MomentValue` carrying two tail
estimates for the discarded range (X, infinity):

* ``tail_crude`` uses a conservative structural envelope (|f(t)| <= 1.04 t
  for the cumulative prime sums, sqrt(t) (log t)^2 for their difference),
* ``tail_empirical`` uses the same shape with the coefficient measured on
  sampled t in [1e3, X]; it is a heuristic, not a bound, and is clamped to
  never exceed the crude tail.

A tail that diverges for the given Re(s) is stored as ``inf`` rather than
raised, so truncated values remain usable for trend inspection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import StepFunction, eval_step
from .errors import DivergenceError, DomainError, InvalidArgumentError

__all__ = [
    "MomentValue",
    "basic_log_moment",
    "step_moment",
    "step_moments_scan",
    "e_n_integral",
    "eta_moments_scan",
    "delta_n_integral",
    "delta_moments_scan",
]

_CHUNK = 1 << 20

# envelope shapes: coefficient * t^alpha * (log t)^beta
_CRUDE_LINEAR = (1.04, 1.0, 0)  # cumulative prime sums stay below 1.04 t
_CRUDE_SQRTLOG = (1.0, 0.5, 2)  # prime-power correction stays below sqrt(t) log^2 t
_EMPIRICAL_EXPONENT = 0.52


@dataclass(frozen=True)
class MomentValue:
    """A truncated moment with explicit estimates for the discarded tail."""

    value: complex
    truncation: float  # X
    tail_crude: float  # conservative envelope bound, inf if divergent
    tail_empirical: float  # measured-coefficient envelope estimate (heuristic)
    n: int
    s: complex


def basic_log_moment(a: float, b: float, n: int, s: complex) -> complex:
    """Exact value of integral_a^b (log t)^n t^(-s-1) dt.

    ``b`` may be ``math.inf``, in which case Re(s) > 0 is required.
    """
    if n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n}")
    if not 1.0 <= a or not a < b:
        raise InvalidArgumentError(f"need 1 <= a < b, got a={a}, b={b}")
    s = complex(s)
    if s == 0:
        raise InvalidArgumentError("s = 0 is outside the reduction's domain")
    la = math.log(a)
    ga = a**-s
    if math.isinf(b):
        if s.real <= 0:
            raise DivergenceError(f"integral to infinity diverges for Re(s) = {s.real}")
        cur = ga / s
        lap = 1.0
        for j in range(1, n + 1):
            lap *= la
            cur = (lap * ga) / s + (j / s) * cur
    else:
        lb = math.log(b)
        gb = b**-s
        cur = (ga - gb) / s
        lap = lbp = 1.0
        for j in range(1, n + 1):
            lap *= la
            lbp *= lb
            cur = (lap * ga - lbp * gb) / s + (j / s) * cur
    if s.imag == 0:
        return complex(cur.real, 0.0)
    return cur


def _tail_integral(X: float, m: int, sigma_eff: float) -> float:
    """integral_X^inf (log t)^m t^(-sigma_eff - 1) dt, inf when divergent."""
    if sigma_eff <= 0:
        return math.inf
    return basic_log_moment(X, math.inf, m, sigma_eff).real


def _envelope_tail(coeff: float, alpha: float, beta: int, X: float, n: int, sigma: float) -> float:
    if coeff is None:
        return math.inf
    return coeff * _tail_integral(X, n + beta, sigma - alpha)


def _measure_coefficient(f: StepFunction, X: float, alpha: float, beta: int) -> float | None:
    """max |f(t)| / (t^alpha (log t)^beta) over jump points in the sample window."""
    lo = 1000.0 if X >= 2000.0 else 2.0
    sel = (f.abscissas >= lo) & (f.abscissas <= X)
    if not np.any(sel):
        return None
    xs = f.abscissas[sel].astype(np.float64)
    vals = np.abs(f.cumulative[sel])
    denom = xs**alpha
    if beta:
        denom = denom * np.log(xs) ** beta
    return float(np.max(vals / denom))


def _interval_moment_sums(a: np.ndarray, b: np.ndarray, c: np.ndarray, nmax: int, s: complex) -> np.ndarray:
    """[sum_i c_i I_j(a_i, b_i; s) for j = 0..nmax], vectorized over intervals."""
    real = s.imag == 0.0
    la, lb = np.log(a), np.log(b)
    if real:
        sr = s.real
        ga, gb = np.exp(-sr * la), np.exp(-sr * lb)
        out = np.empty(nmax + 1, dtype=np.complex128)
        cur = (ga - gb) / sr
        out[0] = float(np.dot(c, cur))
        pa = np.ones_like(la)
        pb = np.ones_like(lb)
        for j in range(1, nmax + 1):
            pa *= la
            pb *= lb
            cur = (pa * ga - pb * gb) / sr + (j / sr) * cur
            out[j] = float(np.dot(c, cur))
        return out
    ga, gb = np.exp(-s * la.astype(np.complex128)), np.exp(-s * lb.astype(np.complex128))
    out = np.empty(nmax + 1, dtype=np.complex128)
    cur = (ga - gb) / s
    out[0] = np.dot(c, cur)
    pa = np.ones_like(la)
    pb = np.ones_like(lb)
    for j in range(1, nmax + 1):
        pa *= la
        pb *= lb
        cur = (pa * ga - pb * gb) / s + (j / s) * cur
        out[j] = np.dot(c, cur)
    return out


def _fsum_complex(parts: list[complex]) -> complex:
    return complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))


def _step_truncated_moments(f: StepFunction, nmax: int, s: complex, X: float) -> np.ndarray:
    """Truncated moments of a step function for n = 0..nmax (no sign, no tails)."""
    sel = f.abscissas <= X
    xs = f.abscissas[sel].astype(np.float64)
    if xs.size == 0:
        return np.zeros(nmax + 1, dtype=np.complex128)
    cs = f.cumulative[sel]
    starts = xs
    ends = np.concatenate((xs[1:], [X]))
    keep = ends > starts
    starts, ends, cs = starts[keep], ends[keep], cs[keep]
    if starts.size == 0:
        return np.zeros(nmax + 1, dtype=np.complex128)
    partials: list[list[complex]] = [[] for _ in range(nmax + 1)]
    for lo in range(0, starts.size, _CHUNK):
        hi = min(lo + _CHUNK, starts.size)
        sums = _interval_moment_sums(starts[lo:hi], ends[lo:hi], cs[lo:hi], nmax, s)
        for j in range(nmax + 1):
            partials[j].append(complex(sums[j]))
    return np.array([_fsum_complex(p) for p in partials], dtype=np.complex128)


def _check_moment_args(f: StepFunction, n: int, X: float) -> None:
    if n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n}")
    if X > f.limit:
        raise DomainError(f"X={X} exceeds the step function's limit {f.limit}")
    if X < 1.0:
        raise DomainError(f"X={X} below the integration origin 1")


def step_moment(f: StepFunction, n: int, s: complex, X: float) -> MomentValue:
    """Truncated moment integral_1^X f(t) (log t)^n t^(-s-1) dt with tails."""
    return step_moments_scan(f, n, s, X)[n]


def step_moments_scan(f: StepFunction, nmax: int, s: complex, X: float) -> list[MomentValue]:
    """All moments n = 0..nmax in one pass over the jump list."""
    _check_moment_args(f, nmax, X)
    s = complex(s)
    values = _step_truncated_moments(f, nmax, s, X)
    A = _measure_coefficient(f, X, _EMPIRICAL_EXPONENT, 0)
    return [
        _with_tails(values[j], X, j, s, _CRUDE_LINEAR, (A, _EMPIRICAL_EXPONENT, 0))
        for j in range(nmax + 1)
    ]


def _with_tails(value, X, n, s, crude, empirical) -> MomentValue:
    crude_tail = _envelope_tail(crude[0], crude[1], crude[2], X, n, s.real)
    emp_tail = _envelope_tail(empirical[0], empirical[1], empirical[2], X, n, s.real)
    emp_tail = min(emp_tail, crude_tail)
    return MomentValue(complex(value), float(X), crude_tail, emp_tail, int(n), s)


# ---------------------------------------------------------------------------
# eta moments: streaming over the merged integer grid (eta is constant on
# [k, k+1), equal to theta(k) - k), memory O(pi(X)) + one block
# ---------------------------------------------------------------------------


def eta_moments_scan(theta: StepFunction, nmax: int, s0: complex, X: float) -> list[MomentValue]:
    """(-1)^n-signed truncated moments of eta for n = 0..nmax, one streaming pass.

    Valid for Re(s0) > 1 only: that is where the full integral converges, so
    a truncation-plus-tail report is meaningful.
    """
    _check_moment_args(theta, nmax, X)
    s0 = complex(s0)
    if s0.real <= 1.0:
        raise DomainError(f"eta moments need Re(s0) > 1, got {s0.real}")
    real = s0.imag == 0.0
    Kmax = int(math.floor(X))

    theta_cum = np.concatenate(([0.0], theta.cumulative))
    partials: list[list[complex]] = [[] for _ in range(nmax + 1)]
    best_ratio = 0.0
    sample_lo = 1000.0 if X >= 2000.0 else 2.0

    for lo in range(1, Kmax, _CHUNK):
        hi = min(lo + _CHUNK, Kmax)  # intervals [k, k+1) for k in [lo, hi)
        pts = np.arange(lo, hi + 1, dtype=np.float64)
        lt = np.log(pts)
        idx = np.searchsorted(theta.abscissas, np.arange(lo, hi), side="right")
        eta = theta_cum[idx] - pts[:-1]

        sel = pts[:-1] >= sample_lo
        if np.any(sel):
            ratio = np.abs(eta[sel]) / pts[:-1][sel] ** _EMPIRICAL_EXPONENT
            best_ratio = max(best_ratio, float(np.max(ratio)))

        if real:
            g = np.exp(-s0.real * lt)
            sdiv = s0.real
        else:
            g = np.exp(-s0 * lt.astype(np.complex128))
            sdiv = s0
        cur = (g[:-1] - g[1:]) / sdiv
        partials[0].append(complex(np.dot(eta, cur)))
        pg = g.copy()
        for j in range(1, nmax + 1):
            pg *= lt
            cur = (pg[:-1] - pg[1:]) / sdiv + (j / sdiv) * cur
            partials[j].append(complex(np.dot(eta, cur)))

    if X > Kmax and Kmax >= 1:
        c = eval_step(theta, float(Kmax)) - Kmax
        for j in range(nmax + 1):
            partials[j].append(c * basic_log_moment(float(Kmax), X, j, s0))

    A = best_ratio if best_ratio > 0.0 else None
    out = []
    for j in range(nmax + 1):
        total = _fsum_complex(partials[j]) if partials[j] else 0.0
        signed = total if j % 2 == 0 else -total
        out.append(
            _with_tails(signed, X, j, s0, _CRUDE_LINEAR, (A, _EMPIRICAL_EXPONENT, 0))
        )
    return out


def e_n_integral(theta: StepFunction, n: int, s0: complex, X: float) -> MomentValue:
    """nth signed eta moment: the integral route to the nth derivative of E at s0."""
    return eta_moments_scan(theta, n, s0, X)[n]


def delta_moments_scan(delta: StepFunction, nmax: int, s0: complex, X: float) -> list[MomentValue]:
    """(-1)^n-signed truncated moments of the prime-power correction delta.

    Valid for Re(s0) > 1/2; tails use the sqrt(t) (log t)^2 envelope family.
    """
    _check_moment_args(delta, nmax, X)
    s0 = complex(s0)
    if s0.real <= 0.5:
        raise DomainError(f"delta moments need Re(s0) > 1/2, got {s0.real}")
    values = _step_truncated_moments(delta, nmax, s0, X)
    A = _measure_coefficient(delta, X, _CRUDE_SQRTLOG[1], _CRUDE_SQRTLOG[2])
    out = []
    for j in range(nmax + 1):
        signed = values[j] if j % 2 == 0 else -values[j]
        out.append(
            _with_tails(signed, X, j, s0, _CRUDE_SQRTLOG, (A, _CRUDE_SQRTLOG[1], _CRUDE_SQRTLOG[2]))
        )
    return out


def delta_n_integral(delta: StepFunction, n: int, s0: complex, X: float) -> MomentValue:
    """nth signed delta moment: the integral route to the nth derivative of Delta."""
    return delta_moments_scan(delta, n, s0, X)[n]
