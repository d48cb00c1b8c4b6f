#!/usr/bin/env python3
"""Phase-transition experiments.

Sweeping p = c * scale(n) and watching the property probability flip from 0
to 1 as the multiplier c crosses a threshold. Connectivity under the
complete 3-uniform driver turns on at p ~ log(n)/n^2; simplicity dies
somewhere between 1/n^3 and 1/n^2. CSV comes straight from the harness;
rendering is left to whatever plotting tool you like.
"""

from mglab.experiments import (
    ExperimentConfig,
    run_monte_carlo,
    shadow_completeness_estimate,
    threshold_scan,
)

TRIALS = 2_000  # bump to 10_000 for the acceptance-grade curves
SEED = 20260809

# ---------------------------------------------------------------------------
# Connectivity at k=3 against multiples of log(n)/n^2.
print("connectivity, p = c log(n)/n^2:")
print(threshold_scan("connected", "logn2", [0.2, 1, 3, 5], [100, 200], 3, TRIALS, SEED))

# ---------------------------------------------------------------------------
# Simplicity: nearly certain below 1/n^3, hopeless by 100/n^2.
print("simplicity, p = 0.1/n^3 then p = 100/n^2:")
print(threshold_scan("simple", "invnk", [0.1], [30, 60], 3, TRIALS, SEED))
print(threshold_scan("simple", "invnk1", [100.0], [30, 60], 3, TRIALS, SEED))

# ---------------------------------------------------------------------------
# A plain sweep with mean statistics: isolated vertices die out as p grows.
cfg = ExperimentConfig(
    model="complete-k", n=60, k=3,
    p={"scale": "logn2", "c": [0.5, 1, 2, 4]},
    property="no-isolated", trials=TRIALS, seed=SEED,
)
print("isolated vertices at n=60 (estimate = P(none), mean = average count):")
for row in run_monte_carlo(cfg):
    print(f"  p={row.p:.6f}  P(no isolated)={row.estimate:.3f}  mean isolated={row.mean_statistic:.2f}")

# ---------------------------------------------------------------------------
# The random shadow of the complete 3-uniform driver covers every pair with
# probability tending to one.
print("\nshadow completeness (all pairs proposed at least once):")
for n in (10, 16, 22, 28):
    row = shadow_completeness_estimate(n, 3, TRIALS, SEED)
    print(f"  n={n}: {row.estimate:.3f}  [{row.ci_low:.3f}, {row.ci_high:.3f}]")
