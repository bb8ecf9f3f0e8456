"""In very sparse graphs the spectrum is controlled by tiny components.

Below roughly p = 1/(n 2^(n/k)) the graph shatters into components with
at most k edges, the densest of which are stars, so lambda1^2 lands on
the maximum degree or one more.

Run with:  python3 demos/05_sparse_components.py
"""

import math
from collections import Counter

from cubespectra import (
    SampleParams,
    case4_cutoff,
    case4_shape_check,
    connected_components,
    expected_yk_upper,
    is_star,
    lanczos_lambda1,
    max_degree,
    per_component_lambda1,
    sample_subgraph,
)


def main() -> None:
    n, p = 16, 2.0 ** -13
    print(f"== One sparse sample: n={n}, p=2^-13 ==")
    graph = sample_subgraph(SampleParams(n, p, master_seed=21))
    census = connected_components(graph)
    print(f"{graph.edge_count} edges in {len(census.components)} components "
          f"({census.yk.get(0, 0)} isolated vertices).")
    sizes = Counter(c.edge_count for c in census.components if c.edge_count > 0)
    print(f"components by edge count: {dict(sorted(sizes.items()))}")
    print(f"largest component has {census.largest_component_edges} edges "
          f"(size cutoff estimate {case4_cutoff(n, p)})")
    edged = [c for c in census.components if c.edge_count > 0]
    stars = sum(1 for c in edged if is_star(c))
    print(f"{stars} of {len(edged)} non-trivial components are stars")

    print()
    print("== The global lambda1 is a per-component maximum ==")
    lam = lanczos_lambda1(graph).lambda1
    per = per_component_lambda1(graph, census)
    print(f"global lambda1 = {lam:.12f}")
    print(f"max over components = {max(per):.12f} "
          f"(difference {abs(lam - max(per)):.2e})")

    print()
    print("== lambda1^2 hits the maximum degree or one above it ==")
    shape = case4_shape_check(graph, census, lam)
    print(f"Delta = {shape.delta}, lambda1^2 = {lam * lam:.6f}, "
          f"shape_ok = {shape.shape_ok}, achiever_is_star = {shape.achiever_is_star}")

    print()
    print("== A star with k edges has lambda1 = sqrt(k) ==")
    # Slightly denser so multi-edge stars actually appear.
    for trial in range(3):
        g = sample_subgraph(SampleParams(n, 2.0 ** -11, master_seed=30, trial_index=trial))
        d = max_degree(g)
        lam = lanczos_lambda1(g).lambda1
        print(f"trial {trial}: Delta = {d}, lambda1 = {lam:.6f}, "
              f"sqrt(Delta) = {math.sqrt(d):.6f}")

    print()
    print("== Expected counts of components with k edges decay fast ==")
    for k in range(1, 5):
        observed = sizes.get(k, 0)
        print(f"k={k}: observed Y_{k} = {observed:4d}, "
              f"upper envelope for E[Y_{k}] = {expected_yk_upper(n, p, k):.4g}")


if __name__ == "__main__":
    main()
