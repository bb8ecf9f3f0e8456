import math

import numpy as np
import pytest

from cubespectra.cube_graph import (
    SampleParams,
    degrees,
    from_edge_list,
    full_cube,
    max_degree,
    sample_subgraph,
)
from cubespectra.eigensolve import dense_spectrum
from cubespectra.spectral_bounds import (
    bipartite_product_bound,
    bound_report,
    common_cube_neighbors,
    parity_sides,
    sandwich_bounds,
    sqrt_edges_bound,
    theorem_prediction,
    walk2_max,
)


def brute_walk2_max(graph):
    """Count length-2 walks per start vertex by explicit neighbor loops."""
    best = 0
    for v in range(graph.num_vertices):
        total = 0
        row = int(graph.masks[v])
        for i in range(graph.n):
            if row >> i & 1:
                u = v ^ (1 << i)
                total += bin(int(graph.masks[u])).count("1")
        best = max(best, total)
    return best


def small_graphs(count=60):
    for seed in range(count):
        n = 4 + seed % 3
        p = (0.15, 0.4, 0.7)[seed % 3]
        yield sample_subgraph(SampleParams(n, p, master_seed=seed))


def test_sandwich_against_dense_spectrum():
    for g in small_graphs(90):
        lam = dense_spectrum(g)[0] if g.edge_count else 0.0
        lower, upper = sandwich_bounds(g)
        assert lower - 1e-9 <= lam <= upper + 1e-9
        assert lower == max(math.sqrt(max_degree(g)), 2 * g.edge_count / g.num_vertices)
        assert upper == max_degree(g)


def test_walk2_matches_brute_force():
    for g in small_graphs(60):
        assert walk2_max(g) == brute_walk2_max(g)


def test_walk2_bound_dominates_lambda1():
    for g in small_graphs(60):
        lam = dense_spectrum(g)[0] if g.edge_count else 0.0
        assert lam <= math.sqrt(walk2_max(g)) + 1e-9


def test_walk2_between_delta_and_delta_squared():
    for g in small_graphs(30):
        d = max_degree(g)
        if d:
            assert d <= walk2_max(g) <= d * d


def test_sqrt_edges_bound_and_star_equality():
    for g in small_graphs(30):
        lam = dense_spectrum(g)[0] if g.edge_count else 0.0
        assert lam <= sqrt_edges_bound(g) + 1e-9
    star = from_edge_list(6, sorted((0, 1 << i) for i in range(6)))
    lam = dense_spectrum(star)[0]
    assert abs(lam - sqrt_edges_bound(star)) <= 1e-10


def test_parity_sides_structure():
    sides = parity_sides(4)
    assert sides.dtype == bool
    for v in range(16):
        assert sides[v] == (bin(v).count("1") % 2 == 1)


def test_bipartite_product_bound():
    q = full_cube(5)
    assert abs(bipartite_product_bound(q, parity_sides(5)) - 5.0) <= 1e-12
    for g in small_graphs(30):
        lam = dense_spectrum(g)[0] if g.edge_count else 0.0
        assert lam <= bipartite_product_bound(g, parity_sides(g.n)) + 1e-9


def test_bipartite_bound_rejects_non_independent_sides():
    g = from_edge_list(3, [(0, 1)])
    sides = np.zeros(8, dtype=bool)  # both endpoints of (0, 1) on one side
    with pytest.raises(ValueError, match=r"edge \(0, 1\)"):
        bipartite_product_bound(g, sides)


def test_common_cube_neighbors_exhaustive():
    for n in (2, 3, 5):
        for u in range(2 ** n):
            for v in range(2 ** n):
                count = sum(
                    1
                    for w in range(2 ** n)
                    if bin(u ^ w).count("1") == 1 and bin(v ^ w).count("1") == 1
                )
                assert common_cube_neighbors(u, v, n) == count


def test_common_cube_neighbors_range_check():
    with pytest.raises(ValueError):
        common_cube_neighbors(0, 8, 3)


def test_theorem_prediction_values():
    assert theorem_prediction(9, 20, 0.1) == max(3.0, 2.0)
    assert theorem_prediction(4, 8, 0.5) == 4.0
    assert theorem_prediction(0, 8, 0.0) == 0.0


def test_bound_report_consistency():
    g = sample_subgraph(SampleParams(8, 0.3, master_seed=1))
    rep = bound_report(g, p=0.3)
    assert rep.sqrt_max_degree <= rep.max_degree_bound
    assert rep.prediction == theorem_prediction(max_degree(g), 8, 0.3)
    assert rep.avg_degree == degrees(g).mean()
    no_p = bound_report(g)
    assert no_p.prediction is None
