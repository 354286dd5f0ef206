#!/usr/bin/env python3
"""Build the prime-counting step functions and walk through their values.

theta(t) = sum of log p over primes p <= t
psi(t)   = sum of log p over prime powers p^w <= t
delta(t) = psi(t) - theta(t), jumping only at proper prime powers
eta(t)   = theta(t) - floor(t), the signed gap to the integer staircase
"""

import math

from etamoments import (
    build_delta,
    build_psi,
    build_theta,
    eta_at,
    eval_step,
    mangoldt_jumps,
    sieve_primes,
)

LIMIT = 10**6

table = sieve_primes(LIMIT)
print(f"sieved {len(table)} primes <= {LIMIT:,} (pi(10^6) = 78498)")

theta = build_theta(table)
psi = build_psi(mangoldt_jumps(LIMIT), LIMIT)
delta = build_delta(psi, theta)
print(f"theta has {theta.abscissas.size} jumps, delta only {delta.abscissas.size}")

print("\n    t      theta(t)      psi(t)    delta(t)      eta(t)")
for t in (2, 10, 100, 1000, 10**4, 10**5, 10**6):
    print(f"{t:>8,}  {eval_step(theta, t):10.4f}  {eval_step(psi, t):10.4f}"
          f"  {eval_step(delta, t):10.4f}  {eta_at(theta, t):11.4f}")

print("\nsmall checks:")
print(f"  theta(10) = log 210       -> {eval_step(theta, 10):.6f} vs {math.log(210):.6f}")
print(f"  delta(10) = log 6 + log 2 -> {eval_step(delta, 10):.6f} vs {math.log(12):.6f}")
print(f"  psi = theta + delta at t=10^4: "
      f"{abs(eval_step(psi, 1e4) - eval_step(theta, 1e4) - eval_step(delta, 1e4)):.2e}")

print("\neta stays on the scale of sqrt(t)*polylog; sampled |eta(t)|/sqrt(t):")
for t in (10**3, 10**4, 10**5, 10**6):
    print(f"  t = {t:>9,}: {abs(eta_at(theta, t)) / math.sqrt(t):8.4f}")
