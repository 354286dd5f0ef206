"""Numerical verification of zeta-side closed forms for Mellin moments
of the prime-counting step functions.

The package checks, at desk scale and with explicit error budgets:

* the identity (-1/s)(zeta'(s)/zeta(s) + zeta(s)) = E(s) + Delta(s), where
  E and Delta are the Mellin-type transforms of eta(t) = theta(t) - floor(t)
  and of delta(t) = psi(t) - theta(t),
* the simple pole of Delta at s = 1/2 with unit residue,
* the asymptotics E^(n)(s0) ~ (-1)^(n+1) n! (s0 - 1/2)^(-n-1), tracked
  through the decaying deviation sequence lambda_n.
"""

__version__ = "0.1.0"

from .chebyshev import (
    StepFunction,
    build_delta,
    build_psi,
    build_theta,
    eta_at,
    eval_step,
    eval_step_many,
)
from .closedform import (
    TaylorCoefficients,
    delta_closed,
    delta_series,
    e_closed,
    e_derivs_closed,
    prime_log_sum_P,
    taylor_via_circle,
)
from .convergence import (
    ConvergenceReport,
    DiskSpec,
    ScanRow,
    h_coefficient,
    lambda_of,
    scan_convergence,
    target_term,
    validate_disk,
)
from .mellin import (
    MomentValue,
    basic_log_moment,
    delta_moments_scan,
    delta_n_integral,
    e_n_integral,
    eta_moments_scan,
    step_moment,
    step_moments_scan,
)
from .primes import (
    PrimeTable,
    load_primes,
    mangoldt_jumps,
    mobius_small,
    read_prime_cache,
    sieve_primes,
    write_prime_cache,
)
from .zeta import lemma1_lhs, log_deriv, zeta_derivative, zeta_value
