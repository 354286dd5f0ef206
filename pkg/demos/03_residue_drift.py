#!/usr/bin/env python3
"""Watch (s - 1/2) * Delta(s) drift toward 1 as s approaches 1/2.

Delta extends meromorphically left of its Dirichlet half-plane with a simple
pole at s = 1/2 of residue 1. The closed form reaches s = 0.52 easily; the
probe g(s) = (s - 1/2) Delta(s) should approach 1 linearly in (s - 1/2).
"""

from etamoments import delta_closed, delta_series

print("   s        g(s) = (s-1/2) Delta(s)     |g - 1|")
for s in (0.80, 0.70, 0.60, 0.55, 0.52, 0.51):
    g = (s - 0.5) * delta_closed(s)
    print(f"  {s:.2f}     {g.real:+.8f}              {abs(g - 1):.6f}")

print("\nthe drift is ~ C (s - 1/2): ratios of |g-1| to (s-1/2):")
for s in (0.60, 0.55, 0.52, 0.51):
    g = (s - 0.5) * delta_closed(s)
    print(f"  s = {s:.2f}: {abs(g - 1) / (s - 0.5):.4f}")

print("\ncross-check at s = 2 (well inside the Dirichlet half-plane):")
print(f"  closed form    {delta_closed(2.0).real:.12f}")
print(f"  prime powers   {delta_series(2.0).real:.12f}")
