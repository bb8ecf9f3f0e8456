"""Sample random subgraphs of the n-cube and inspect their structure.

Run with:  python3 demos/01_sampling_quickstart.py
"""

import numpy as np

from cubespectra import (
    SampleParams,
    degree_histogram,
    derive_seed,
    full_cube,
    max_degree,
    sample_subgraph,
    to_edge_list,
    validate_graph,
)


def main() -> None:
    print("== The full cube ==")
    cube = full_cube(3)
    print(f"Q^3 has {cube.num_vertices} vertices and {cube.edge_count} edges.")
    print("Edge list (vertices are bit strings, edges flip one bit):")
    for u, v in to_edge_list(cube):
        print(f"  {u:03b} -- {v:03b}")

    print()
    print("== Keeping each edge with probability p ==")
    params = SampleParams(n=4, p=0.5, master_seed=7, trial_index=0)
    graph = sample_subgraph(params)
    validate_graph(graph)
    expected = params.n * 2 ** (params.n - 1) * params.p
    print(f"n={params.n}, p={params.p}: kept {graph.edge_count} of "
          f"{params.n * 2 ** (params.n - 1)} edges (expected {expected:.0f}).")
    print(f"max degree = {max_degree(graph)}")
    print(f"degree histogram = {degree_histogram(graph)}")

    print()
    print("== Reproducibility ==")
    again = sample_subgraph(params)
    identical = bool(np.array_equal(graph.masks, again.masks))
    print(f"Same (seed, n, p, trial) resampled: identical masks? {identical}")
    seeds = [derive_seed(7, 4, 0.5, t) for t in range(4)]
    print(f"Per-trial stream seeds for trials 0..3: {[hex(s) for s in seeds]}")

    print()
    print("== Very sparse graphs use a direct edge-index sampler ==")
    sparse = sample_subgraph(SampleParams(n=16, p=2.0 ** -13, master_seed=7))
    print(f"n=16, p=2^-13: kept {sparse.edge_count} of {16 * 2 ** 15} edges "
          f"(expected {16 * 2 ** 15 * 2.0 ** -13:.0f}).")
    print("First few edges:", to_edge_list(sparse)[:4])


if __name__ == "__main__":
    main()
