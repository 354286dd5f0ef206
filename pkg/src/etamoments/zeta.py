"""Riemann zeta, its derivative, and the zeta-side combination via Euler-Maclaurin.

The evaluation is the classical Euler-Maclaurin continuation of the Dirichlet
series: a partial sum of N terms, the integral and midpoint corrections, and
Bernoulli-weighted boundary terms. The derivative is obtained by
differentiating every term analytically (no finite differences), which keeps
relative accuracy near 1e-13 on the whole validated domain.

Validated domain (checked on every call):

* Re(s) > 0.4 and s != 1,
* |Im(s)| <= 8 whenever Re(s) <= 1.4 (keeps well below the first nontrivial
  zero ordinate ~14.13 inside the critical strip),
* |Im(s)| <= 4 * terms elsewhere (Euler-Maclaurin needs N to grow with |Im|).

Larger imaginary parts at Re(s) > 1.4 arise only from dilated arguments js in
the Moebius inversion, where the series converges absolutely and the formula
stays accurate.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, InvalidArgumentError, NearZeroError, PoleError

__all__ = ["zeta_value", "zeta_derivative", "log_deriv", "lemma1_lhs"]

DEFAULT_TERMS = 64
DEFAULT_ORDER = 8

# B_{2k} for k = 1..12
_B2K = [
    1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6,
    -3617 / 510, 43867 / 798, -174611 / 330, 854513 / 138, -236364091 / 2730,
]

_LOG_CACHE: dict[int, np.ndarray] = {}


def _logs_upto(n: int) -> np.ndarray:
    if n not in _LOG_CACHE:
        _LOG_CACHE[n] = np.log(np.arange(1, n, dtype=np.float64))
    return _LOG_CACHE[n]


def _check_params(terms: int, order: int) -> None:
    if terms < 10:
        raise InvalidArgumentError(f"terms must be >= 10, got {terms}")
    if not 2 <= order <= 12:
        raise InvalidArgumentError(f"bernoulli_order must be in [2, 12], got {order}")


def _check_domain(s: np.ndarray, terms: int) -> None:
    if not np.all(np.isfinite(s)):
        raise DomainError("non-finite argument")
    re, im = s.real, s.imag
    if np.any(np.abs(s - 1.0) < 1e-14):
        raise PoleError("zeta has a pole at s = 1")
    if np.any(re <= 0.4):
        raise DomainError(f"Re(s) must exceed 0.4, got min {re.min()}")
    bad = (np.abs(im) > 8.0) & (re <= 1.4)
    if np.any(bad):
        raise DomainError("|Im(s)| <= 8 required for Re(s) <= 1.4")
    if np.any(np.abs(im) > 4.0 * terms):
        raise DomainError(f"|Im(s)| exceeds 4*terms = {4 * terms}")


def _em_zeta(s: np.ndarray, terms: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized Euler-Maclaurin: returns (zeta(s), zeta'(s)) for an array s."""
    N = terms
    ln = _logs_upto(N)  # log 1 .. log (N-1)
    lnN = np.log(float(N))

    # partial sums over n = 1..N-1 and their derivative
    expo = np.exp(-np.multiply.outer(s, ln))  # shape (m, N-1)
    z = expo.sum(axis=1)
    dz = -(expo * ln).sum(axis=1)

    NmS = np.exp(-s * lnN)  # N^{-s}
    z += 0.5 * NmS
    dz += -0.5 * lnN * NmS

    sm1 = s - 1.0
    tail = NmS * N / sm1  # N^{1-s}/(s-1)
    z += tail
    dz += -lnN * tail - tail / sm1

    # Bernoulli corrections: c_k * N^{-s-2k+1} * prod_{j=0}^{2k-2}(s+j)
    fact = 1.0
    poch = np.ones_like(s)  # running product of (s+j)
    poch_dlog = np.zeros_like(s)  # running sum of 1/(s+j)
    j = 0
    Npow = NmS * N  # N^{-s+1}
    for k in range(1, order + 1):
        # extend the product up to j = 2k-2
        while j <= 2 * k - 2:
            poch = poch * (s + j)
            poch_dlog = poch_dlog + 1.0 / (s + j)
            j += 1
        fact *= (2 * k - 1) * (2 * k) if k > 1 else 2
        Npow = Npow / (N * N)  # N^{-s-2k+1}
        coeff = _B2K[k - 1] / fact
        term = coeff * Npow * poch
        z += term
        dz += coeff * Npow * (poch * poch_dlog - lnN * poch)
    return z, dz


def _evaluate(s, terms: int, order: int) -> tuple[np.ndarray, np.ndarray, bool]:
    _check_params(terms, order)
    arr = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    scalar = np.ndim(s) == 0
    _check_domain(arr, terms)
    z, dz = _em_zeta(arr, terms, order)
    return z, dz, scalar


def zeta_value(s, terms: int = DEFAULT_TERMS, bernoulli_order: int = DEFAULT_ORDER):
    """zeta(s) on the validated domain; relative error <~ 1e-13 at defaults."""
    z, _, scalar = _evaluate(s, terms, bernoulli_order)
    return complex(z[0]) if scalar else z


def zeta_derivative(s, terms: int = DEFAULT_TERMS, bernoulli_order: int = DEFAULT_ORDER):
    """zeta'(s) by term-wise analytic differentiation of the same formula."""
    _, dz, scalar = _evaluate(s, terms, bernoulli_order)
    return complex(dz[0]) if scalar else dz


def log_deriv(s, terms: int = DEFAULT_TERMS, bernoulli_order: int = DEFAULT_ORDER):
    """zeta'(s)/zeta(s); raises NearZeroError if |zeta(s)| < 1e-8."""
    z, dz, scalar = _evaluate(s, terms, bernoulli_order)
    if np.any(np.abs(z) < 1e-8):
        raise NearZeroError("zeta(s) numerically zero: disk condition violated")
    q = dz / z
    return complex(q[0]) if scalar else q


def lemma1_lhs(s, terms: int = DEFAULT_TERMS, bernoulli_order: int = DEFAULT_ORDER):
    """The zeta-side combination (-1/s) * (zeta'(s)/zeta(s) + zeta(s)).

    This is the closed form whose Mellin-moment decomposition the package
    verifies; the pole of each summand at s = 1 cancels in the combination.
    """
    z, dz, scalar = _evaluate(s, terms, bernoulli_order)
    if np.any(np.abs(z) < 1e-8):
        raise NearZeroError("zeta(s) numerically zero: disk condition violated")
    arr = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    out = (-1.0 / arr) * (dz / z + z)
    return complex(out[0]) if scalar else out
