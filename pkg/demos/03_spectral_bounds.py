"""Deterministic bounds that sandwich the largest eigenvalue.

Every subgraph satisfies max(sqrt(Delta), average degree) <= lambda1
<= Delta, and the sharper two-step walk count gives lambda1 <=
sqrt(max_v sum_u A^2[v, u]).

Run with:  python3 demos/03_spectral_bounds.py
"""

import math

from cubespectra import (
    SampleParams,
    bipartite_product_bound,
    bound_report,
    full_cube,
    lanczos_lambda1,
    parity_sides,
    sample_subgraph,
    sqrt_edges_bound,
    walk2_max,
)


def main() -> None:
    print("== The sandwich and the two-step walk bound ==")
    print(f"{'p':>5} {'lower':>8} {'lambda1':>9} {'walk2':>8} {'Delta':>6}")
    for p in (0.1, 0.3, 0.5, 0.8):
        graph = sample_subgraph(SampleParams(n=10, p=p, master_seed=3))
        report = bound_report(graph, p=p)
        lam = lanczos_lambda1(graph).lambda1
        lower = max(report.sqrt_max_degree, report.avg_degree)
        w2 = math.sqrt(walk2_max(graph))
        print(f"{p:>5} {lower:8.4f} {lam:9.4f} {w2:8.4f} "
              f"{report.max_degree_bound:6.1f}")
        assert lower - 1e-9 <= lam <= w2 + 1e-9 <= report.max_degree_bound + 1e-9

    print()
    print("== sqrt(edge count) also bounds lambda1, loosely ==")
    graph = sample_subgraph(SampleParams(n=8, p=0.2, master_seed=3))
    lam = lanczos_lambda1(graph).lambda1
    print(f"n=8, p=0.2: lambda1 = {lam:.4f}, sqrt(m) = {sqrt_edges_bound(graph):.4f}")

    print()
    print("== Bipartite product bound via the parity split ==")
    # The cube is bipartite by vertex parity; the bound maximizes
    # sqrt(deg(u) deg(v)) over edges and is exactly n on the full cube.
    for n in (6, 10, 14):
        cube = full_cube(n)
        bound = bipartite_product_bound(cube, parity_sides(n))
        print(f"full Q^{n}: bound = {bound:.6f} (lambda1 = {n})")

    print()
    print("== Prediction max(sqrt(Delta), n p) and the measured ratio ==")
    for n, p in ((12, 0.05), (12, 0.5)):
        graph = sample_subgraph(SampleParams(n=n, p=p, master_seed=3))
        report = bound_report(graph, p=p)
        lam = lanczos_lambda1(graph).lambda1
        print(f"n={n}, p={p}: prediction = {report.prediction:.4f}, "
              f"lambda1 = {lam:.4f}, ratio = {lam / report.prediction:.4f}")


if __name__ == "__main__":
    main()
