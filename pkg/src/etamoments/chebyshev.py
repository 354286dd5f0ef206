"""Exact step-function representations of the prime-counting sums.

Three cumulative step functions are built from sieve output:

* ``theta``: jumps by log p at every prime p,
* ``psi``: jumps by log p at every prime power p^w,
* ``delta = psi - theta``: jumps only at proper prime powers (w >= 2).

All three are right-continuous: the value at an integer jump point includes
the jump, matching the "sum over n <= t" convention. Cumulative sums are
accumulated in extended precision before being stored as float64, so the
absolute error of a stored value is a few ULP of the total, not of the
running sequence length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidArgumentError
from .primes import PrimeTable

__all__ = [
    "StepFunction",
    "build_theta",
    "build_psi",
    "build_delta",
    "eval_step",
    "eval_step_many",
    "eta_at",
]


@dataclass(frozen=True)
class StepFunction:
    """Jump list (ascending integer abscissas, cumulative values) valid on [1, limit]."""

    abscissas: np.ndarray  # int64, strictly ascending
    cumulative: np.ndarray  # float64, value of the function at/after each jump
    limit: int

    def __post_init__(self):
        if self.abscissas.size != self.cumulative.size:
            raise InvalidArgumentError("abscissas and cumulative lengths differ")
        if self.abscissas.size and np.any(np.diff(self.abscissas) <= 0):
            raise InvalidArgumentError("jump abscissas must be strictly ascending")

    def __call__(self, t: float) -> float:
        return eval_step(self, t)


def _cumsum_extended(weights: np.ndarray) -> np.ndarray:
    # longdouble keeps the sequential-cumsum rounding well below float64 ULP
    # of the totals even for ~10^7 jumps
    return np.cumsum(weights.astype(np.longdouble)).astype(np.float64)


def build_theta(table: PrimeTable) -> StepFunction:
    """Step function t -> sum of log p over primes p <= t."""
    logs = np.log(table.primes.astype(np.float64))
    return StepFunction(table.primes.copy(), _cumsum_extended(logs), table.limit)


def build_psi(jumps: tuple[np.ndarray, np.ndarray], limit: int | None = None) -> StepFunction:
    """Step function t -> sum of von Mangoldt weights over prime powers <= t.

    ``jumps`` is the (positions, weights) pair from ``mangoldt_jumps``. The
    validity limit defaults to the largest position, so pass the sieve limit
    explicitly when it exceeds the last prime power.
    """
    positions, weights = jumps
    if positions.size == 0:
        raise InvalidArgumentError("empty jump sequence")
    if limit is None:
        limit = int(positions[-1])
    return StepFunction(positions.astype(np.int64), _cumsum_extended(weights), limit)


def build_delta(psi: StepFunction, theta: StepFunction) -> StepFunction:
    """Pointwise difference psi - theta as its own jump list.

    The difference jumps only at proper prime powers, so the result has
    O(sqrt(limit)) jumps. Matching prime jumps cancel; float noise from the
    two cumulative sums is rejected with a threshold far below log 2.
    """
    if psi.limit != theta.limit:
        raise InvalidArgumentError(
            f"mismatched limits: psi {psi.limit}, theta {theta.limit}"
        )
    merged = np.union1d(psi.abscissas, theta.abscissas)
    psi_vals = _values_at_sorted(psi, merged)
    theta_vals = _values_at_sorted(theta, merged)
    diff = psi_vals - theta_vals
    increments = np.diff(np.concatenate(([0.0], diff)))
    keep = np.abs(increments) > 1e-6  # true increments are log p >= log 2
    abscissas = merged[keep]
    values = np.cumsum(increments[keep].astype(np.longdouble)).astype(np.float64)
    return StepFunction(abscissas, values, psi.limit)


def _values_at_sorted(f: StepFunction, points: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(f.abscissas, points, side="right")
    vals = np.concatenate(([0.0], f.cumulative))
    return vals[idx]


def eval_step(f: StepFunction, t: float) -> float:
    """Value of the step function at t, right-continuous at jumps."""
    if not (1.0 <= t <= f.limit):
        raise DomainError(f"t={t} outside [1, {f.limit}]")
    idx = int(np.searchsorted(f.abscissas, t, side="right"))
    return 0.0 if idx == 0 else float(f.cumulative[idx - 1])


def eval_step_many(f: StepFunction, ts: np.ndarray) -> np.ndarray:
    """Vectorized ``eval_step`` over an array of points."""
    ts = np.asarray(ts)
    if ts.size and (ts.min() < 1.0 or ts.max() > f.limit):
        raise DomainError(f"points outside [1, {f.limit}]")
    return _values_at_sorted(f, ts)


def eta_at(theta: StepFunction, t: float) -> float:
    """theta(t) - floor(t): the signed gap between the prime log-sum and the staircase."""
    return eval_step(theta, t) - math.floor(t)
