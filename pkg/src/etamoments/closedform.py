"""Zeta-side closed forms for Delta, E, and their high-order derivatives.

The prime log sum P(s) = sum_p log p * p^(-s) is recovered from the
generating quotient F(s) = -zeta'(s)/zeta(s) by Moebius inversion over
dilated arguments, P(s) = sum_j mu(j) F(js). Because F(js) decays like
2^(-j Re(s)), truncating at j = 40 leaves a geometric remainder far below
double rounding on every argument this package touches.

Delta's closed form drops the j = 1 term algebraically,

    Delta(s) = (F(s) - P(s))/s = -(1/s) * sum_{j >= 2} mu(j) F(js),

which removes the exactly-cancelling pair of F(s) evaluations; the pole of
Delta at s = 1/2 then comes out of the j = 2 term through the pole of F
at argument 1. E follows as the zeta-side combination minus Delta. This
route stays accurate on sampling contours where direct prime sums would
need billions of terms, and it scales to derivative order ~80 via
discrete-contour Taylor extraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContourPoleError, DomainError, InvalidArgumentError
from .primes import mobius_small, sieve_primes
from .zeta import DEFAULT_ORDER, DEFAULT_TERMS, lemma1_lhs, log_deriv

__all__ = [
    "TaylorCoefficients",
    "prime_log_sum_P",
    "delta_closed",
    "e_closed",
    "delta_series",
    "taylor_via_circle",
    "e_derivs_closed",
]

MOBIUS_J_MAX = 40

# (j, mu(j)) for squarefree j up to the truncation bound
_MU_J = [(j, mobius_small(j)) for j in range(1, MOBIUS_J_MAX + 1) if mobius_small(j) != 0]


@dataclass(frozen=True)
class TaylorCoefficients:
    """Taylor coefficients a_0..a_nmax of an analytic function at ``center``.

    ``noise_floor[n]`` estimates the absolute rounding error of a_n as
    machine epsilon * max |f| on the contour / radius^n. Aliasing error of
    the discrete contour sum decays like (radius/rho)^M and is negligible
    for the sample counts used here; rounding dominates.
    """

    center: complex
    radius: float
    count: int  # number of contour samples M
    coeffs: np.ndarray  # complex128, length nmax+1
    noise_floor: np.ndarray  # float64, length nmax+1


def _check_half_plane(s, what: str) -> None:
    re = np.atleast_1d(np.asarray(s)).real
    if np.any(re <= 0.5):
        raise DomainError(f"{what} needs Re(s) > 1/2, got min Re = {re.min()}")


def prime_log_sum_P(s, jmax: int = MOBIUS_J_MAX, terms: int = DEFAULT_TERMS,
                    bernoulli_order: int = DEFAULT_ORDER):
    """P(s) = sum over primes of log p / p^s, by Moebius inversion of -zeta'/zeta."""
    _check_half_plane(s, "prime_log_sum_P")
    scalar = np.ndim(s) == 0
    arr = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    total = np.zeros_like(arr)
    for j, mu in _MU_J:
        if j > jmax:
            break
        total += mu * -log_deriv(j * arr, terms, bernoulli_order)
    return complex(total[0]) if scalar else total


def delta_closed(s, terms: int = DEFAULT_TERMS, bernoulli_order: int = DEFAULT_ORDER):
    """Delta(s) = (F(s) - P(s))/s, with the cancelling j = 1 terms dropped."""
    _check_half_plane(s, "delta_closed")
    scalar = np.ndim(s) == 0
    arr = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    total = np.zeros_like(arr)
    for j, mu in _MU_J:
        if j == 1:
            continue
        total += mu * -log_deriv(j * arr, terms, bernoulli_order)
    out = -total / arr
    return complex(out[0]) if scalar else out


def e_closed(s, terms: int = DEFAULT_TERMS, bernoulli_order: int = DEFAULT_ORDER):
    """E(s) = (-1/s)(zeta'/zeta + zeta)(s) - Delta(s), the scalable route to E."""
    lhs = lemma1_lhs(s, terms, bernoulli_order)
    return lhs - delta_closed(s, terms, bernoulli_order)


def delta_series(s, pp_limit: int = 10**8) -> complex:
    """Delta(s) by its Dirichlet series over proper prime powers p^w <= pp_limit.

    Independent of the zeta/Moebius machinery: needs only a sieve up to
    sqrt(pp_limit). Truncation error is of order pp_limit^(1/2 - Re(s)),
    i.e. ~1e-13 at s = 2 with the default limit.
    """
    s = complex(s)
    if s.real <= 0.5:
        raise DomainError(f"delta_series needs Re(s) > 1/2, got {s.real}")
    primes = sieve_primes(math.isqrt(pp_limit)).primes
    log_p = np.log(primes.astype(np.float64))
    total = 0.0 + 0.0j
    w = 2
    while True:
        sel = primes.astype(np.float64) ** w <= pp_limit
        if not np.any(sel):
            break
        lp = log_p[sel]
        total += np.sum(lp * np.exp(-(s * w) * lp))
        w += 1
    return complex(total / s)


def taylor_via_circle(f, s0: complex, r: float, M: int, nmax: int | None = None,
                      accumulation: str = "double") -> TaylorCoefficients:
    """Taylor coefficients of f at s0 from M equispaced samples on |s - s0| = r.

    a_n = (1/(M r^n)) sum_j f(s0 + r e^{2 pi i j / M}) e^{-2 pi i j n / M}.
    The caller guarantees f is analytic on the closed disk of radius r.
    M must be a power of two with M >= 4 * nmax; nmax defaults to M // 4.
    ``accumulation="double-double"`` replaces the FFT by an error-free
    compensated direct transform (the samples themselves stay double
    precision, so the noise model is unchanged).
    """
    if M < 4 or M & (M - 1) != 0:
        raise InvalidArgumentError(f"M must be a power of two >= 4, got {M}")
    if nmax is None:
        nmax = M // 4
    if nmax < 0 or 4 * nmax > M:
        raise InvalidArgumentError(f"need M >= 4*nmax, got M={M}, nmax={nmax}")
    if accumulation not in ("double", "double-double"):
        raise InvalidArgumentError(f"unknown accumulation tier {accumulation!r}")
    s0 = complex(s0)
    r = float(r)
    phases = np.exp(2j * np.pi * np.arange(M) / M)
    nodes = s0 + r * phases
    samples = np.asarray(f(nodes), dtype=np.complex128)
    if samples.shape != (M,):
        samples = np.array([f(z) for z in nodes], dtype=np.complex128)

    if accumulation == "double":
        raw = np.fft.fft(samples)[: nmax + 1] / M
    else:
        raw = np.empty(nmax + 1, dtype=np.complex128)
        for n in range(nmax + 1):
            twiddle = np.exp(-2j * np.pi * n * np.arange(M) / M)
            prods = samples * twiddle
            raw[n] = complex(math.fsum(prods.real), math.fsum(prods.imag)) / M

    scale = r ** -np.arange(nmax + 1, dtype=np.float64)
    coeffs = raw * scale
    max_f = float(np.max(np.abs(samples)))
    noise = np.finfo(np.float64).eps * max_f * scale
    return TaylorCoefficients(s0, r, M, coeffs, noise)


def _factorial_scaled(values: np.ndarray) -> np.ndarray:
    """values[n] * n! in log space, element-wise over n = 0..len-1."""
    out = np.empty_like(values, dtype=np.complex128)
    for n in range(values.size):
        v = values[n]
        mag = abs(v)
        if mag == 0.0:
            out[n] = 0.0
            continue
        logmag = math.lgamma(n + 1) + math.log(mag)
        if logmag > 709.0:
            out[n] = complex(math.inf, math.inf)
        else:
            out[n] = (v / mag) * math.exp(logmag)
    return out


def e_derivs_closed(s0: complex, nmax: int, r: float, M: int,
                    accumulation: str = "double",
                    terms: int = DEFAULT_TERMS,
                    bernoulli_order: int = DEFAULT_ORDER) -> tuple[np.ndarray, np.ndarray]:
    """Derivatives E^(n)(s0) for n = 0..nmax via contour Taylor extraction.

    Returns (values, noise_floors) with per-n absolute noise n! * a_n floor.
    The contour must keep Re > 1/2 and stay short of the pole at 1/2.
    """
    s0 = complex(s0)
    r = float(r)
    if r >= abs(s0 - 0.5):
        raise ContourPoleError(
            f"contour radius {r} reaches the pole at 1/2 (distance {abs(s0 - 0.5)})"
        )
    if s0.real - r <= 0.5:
        raise DomainError(
            f"contour leaves Re > 1/2: min Re = {s0.real - r}"
        )
    tc = taylor_via_circle(
        lambda z: e_closed(z, terms, bernoulli_order), s0, r, M, nmax, accumulation
    )
    values = _factorial_scaled(tc.coeffs)
    noise = np.abs(_factorial_scaled(tc.noise_floor.astype(np.complex128)))
    return values, noise
