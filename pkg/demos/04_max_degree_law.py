"""The maximum degree concentrates near kappa(n, p).

kappa is the largest k for which the expected number of vertices with
degree >= k is still at least one.  The module predicts a small window
around it and bounds the chance of leaving that window.

Run with:  python3 demos/04_max_degree_law.py
"""

import numpy as np

from cubespectra import (
    SampleParams,
    classify_regime,
    constant_p_coefficient,
    degree_profile,
    expected_exceed_count,
    kappa,
    max_degree,
    predicted_max_degree,
    prob_max_degree_ge,
    prob_max_degree_lt,
    sample_subgraph,
)


def main() -> None:
    print("== kappa grows slowly with n at fixed p ==")
    for n in (10, 20, 40, 80, 160, 320):
        print(f"n={n:4d}, p=0.1: kappa = {kappa(n, 0.1)}")

    print()
    print("== E[#vertices with degree >= k] crosses 1 at kappa ==")
    n, p = 20, 0.1
    k0 = kappa(n, p)
    for k in range(k0 - 2, k0 + 3):
        marker = "  <- kappa" if k == k0 else ""
        print(f"k={k:2d}: E[X_k] = {expected_exceed_count(n, p, k):12.4g}{marker}")

    print()
    print("== Density regimes at n=20 ==")
    for p in (1e-30, 0.1, 0.2, 0.27, 0.5):
        print(f"p={p:<6g}: regime = {classify_regime(20, p)}")

    print()
    print("== Predicted window vs Monte Carlo ==")
    n, p, trials = 14, 0.1, 200
    window = predicted_max_degree(n, p)
    deltas = np.array([
        max_degree(sample_subgraph(SampleParams(n, p, master_seed=5, trial_index=t)))
        for t in range(trials)
    ])
    lo, hi = window
    inside = float(np.mean((deltas >= lo) & (deltas <= hi)))
    print(f"n={n}, p={p}: kappa = {kappa(n, p)}, predicted window = {window}")
    print(f"observed max degrees over {trials} trials: "
          f"min {deltas.min()}, median {int(np.median(deltas))}, max {deltas.max()}")
    print(f"fraction inside the window: {inside:.3f}")

    print()
    print("== Tail bounds dominate the observed frequencies ==")
    n, p, trials = 10, 0.1, 300
    deltas = np.array([
        max_degree(sample_subgraph(SampleParams(n, p, master_seed=9, trial_index=t)))
        for t in range(trials)
    ])
    k0 = kappa(n, p)
    print(f"{'k':>3} {'P(Delta < k) bound':>19} {'observed':>9} "
          f"{'P(Delta >= k) bound':>20} {'observed':>9}")
    for k in range(k0, k0 + 3):
        below = float(np.mean(deltas < k))
        above = float(np.mean(deltas >= k))
        print(f"{k:>3} {prob_max_degree_lt(n, p, k):>19.4f} {below:>9.4f} "
              f"{prob_max_degree_ge(n, p, k):>20.4f} {above:>9.4f}")

    print()
    print("== Constant p: kappa/n approaches a coefficient c(p) ==")
    for p in (0.1, 0.25, 0.4, 0.5):
        c = constant_p_coefficient(p)
        k_big = kappa(4096, p)
        print(f"p={p}: c(p) = {c:.6f}, kappa(4096, p)/4096 = {k_big / 4096:.6f}")

    print()
    print("== Everything bundled in one profile ==")
    print(degree_profile(16, 0.1))


if __name__ == "__main__":
    main()
