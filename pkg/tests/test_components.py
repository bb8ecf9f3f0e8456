import math

import numpy as np
import pytest

from cubespectra.components import (
    Case4Report,
    case4_cutoff,
    case4_shape_check,
    connected_components,
    expected_yk_upper,
    is_star,
    per_component_lambda1,
)
from cubespectra.cube_graph import (
    SampleParams,
    from_edge_list,
    full_cube,
    sample_subgraph,
    to_edge_list,
)
from cubespectra.eigensolve import SolverConfig, dense_spectrum, lanczos_lambda1

GOLDEN = (1 + math.sqrt(5)) / 2


def test_full_cube_is_one_component():
    census = connected_components(full_cube(6))
    assert len(census.components) == 1
    comp = census.components[0]
    assert len(comp.vertices) == 64
    assert comp.edge_count == 6 * 32
    assert comp.max_degree == 6
    assert census.largest_component_edges == 192
    assert census.yk == {192: 1}


def test_empty_graph_census():
    g = sample_subgraph(SampleParams(5, 0.0))
    census = connected_components(g)
    assert len(census.components) == 32
    assert all(c.edge_count == 0 and len(c.vertices) == 1 for c in census.components)
    assert census.yk == {0: 32}
    assert census.largest_component_edges == 0


def test_hand_built_disjoint_stars():
    # S3 centered at 0 and S5 centered at 56 inside Q6.
    s3 = [(0, 1), (0, 2), (0, 4)]
    s5 = sorted((min(56, 56 ^ bit), max(56, 56 ^ bit)) for bit in (1, 2, 4, 8, 16))
    g = from_edge_list(6, sorted(s3 + s5))
    census = connected_components(g)
    assert census.yk == {0: 64 - 10, 3: 1, 5: 1}
    assert census.largest_component_edges == 5
    starred = [c for c in census.components if c.edge_count > 0]
    assert all(is_star(c) for c in starred)

    values = per_component_lambda1(g, census, SolverConfig())
    assert max(values) == pytest.approx(math.sqrt(5), abs=1e-10)
    lam = lanczos_lambda1(g, SolverConfig()).lambda1
    assert lam == pytest.approx(math.sqrt(5), abs=1e-10)

    check = case4_shape_check(g, census, lam)
    assert check.shape_ok  # lambda1^2 = 5 = Delta
    assert check.achiever_is_star
    assert check.delta == 5


def test_components_ordered_by_smallest_vertex():
    g = from_edge_list(4, [(0, 1), (4, 12), (2, 10)])
    census = connected_components(g)
    firsts = [c.vertices[0] for c in census.components]
    assert firsts == sorted(firsts)
    for c in census.components:
        assert c.vertices == sorted(c.vertices)


def test_per_component_matches_global_on_sparse_samples():
    solver = SolverConfig()
    for seed in range(10):
        g = sample_subgraph(SampleParams(8, 0.03, master_seed=seed))
        if g.edge_count == 0:
            continue
        census = connected_components(g)
        best = max(per_component_lambda1(g, census, solver))
        lam = dense_spectrum(g)[0]
        assert best == pytest.approx(lam, abs=1e-8)


def test_restricted_solver_used_above_dense_limit():
    # A p just below the connectivity threshold keeps a giant component
    # with far more than 1024 vertices, forcing the matrix-free path.
    g = sample_subgraph(SampleParams(11, 0.35, master_seed=0))
    census = connected_components(g)
    assert max(len(c.vertices) for c in census.components) > 1024
    best = max(per_component_lambda1(g, census, SolverConfig()))
    lam = lanczos_lambda1(g, SolverConfig()).lambda1
    assert best == pytest.approx(lam, abs=1e-8)


def test_path_is_not_a_star():
    g = from_edge_list(3, [(0, 1), (1, 3), (3, 7)])
    census = connected_components(g)
    comp = [c for c in census.components if c.edge_count][0]
    assert not is_star(comp)
    lam = dense_spectrum(g)[0]
    assert lam == pytest.approx(math.sqrt(GOLDEN + 1), abs=1e-10)  # lambda^2 = phi+1
    check = case4_shape_check(g, census, lam)
    assert not check.shape_ok  # lambda1^2 = 2.618..., Delta = 2
    assert not check.achiever_is_star


def test_is_star_classification():
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 4), (0, 8)])
    comp = connected_components(star).components[0]
    assert is_star(comp)
    single_edge = from_edge_list(2, [(0, 1)])
    assert is_star(connected_components(single_edge).components[0])
    isolated = connected_components(sample_subgraph(SampleParams(2, 0.0))).components[0]
    assert not is_star(isolated)


def test_case4_shape_check_delta_plus_one_branch():
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 4), (0, 8)])
    census = connected_components(star)
    report = case4_shape_check(star, census, math.sqrt(5.0))
    assert isinstance(report, Case4Report)
    assert report.shape_ok  # lambda1^2 = Delta + 1 = 5 accepted
    off = case4_shape_check(star, census, math.sqrt(4.5))
    assert not off.shape_ok
    tight = case4_shape_check(star, census, math.sqrt(4.0 + 2e-6))
    assert not tight.shape_ok  # outside the 1e-6 window on lambda^2


def test_case4_shape_check_empty_graph():
    g = sample_subgraph(SampleParams(4, 0.0))
    census = connected_components(g)
    report = case4_shape_check(g, census, 0.0)
    assert report.shape_ok
    assert not report.achiever_is_star


def test_subadditivity_over_edge_unions():
    rng = np.random.default_rng(3)
    for seed in range(50):
        g = sample_subgraph(SampleParams(6, 0.4, master_seed=seed))
        edges = to_edge_list(g)
        if len(edges) < 2:
            continue
        picks = rng.random(len(edges)) < 0.5
        first = [e for e, take in zip(edges, picks) if take]
        second = [e for e, take in zip(edges, picks) if not take]
        lam = dense_spectrum(g)[0]
        lam1 = dense_spectrum(from_edge_list(6, first))[0] if first else 0.0
        lam2 = dense_spectrum(from_edge_list(6, second))[0] if second else 0.0
        assert lam <= lam1 + lam2 + 1e-9


def test_sqrt_edges_equality_only_for_stars():
    star = from_edge_list(5, [(0, 1), (0, 2), (0, 4), (0, 8), (0, 16)])
    assert dense_spectrum(star)[0] == pytest.approx(math.sqrt(5), abs=1e-10)
    path = from_edge_list(3, [(0, 1), (1, 3), (3, 7)])
    assert dense_spectrum(path)[0] < math.sqrt(3) - 1e-3


def test_expected_yk_upper_values_and_guards():
    assert expected_yk_upper(12, 0.0, 3) == 0.0
    assert expected_yk_upper(12, 2.0 ** -14, 1) == pytest.approx(
        2 ** 12 * 1 * 12 * 2.0 ** -14, rel=1e-12
    )
    assert expected_yk_upper(30, 1.0, 30) == math.inf or expected_yk_upper(30, 1.0, 30) > 1e30
    with pytest.raises(ValueError):
        expected_yk_upper(12, 0.5, 0)


def test_yk_majorant_against_monte_carlo():
    n, p, trials = 12, 2.0 ** -12, 200
    totals = {}
    for t in range(trials):
        g = sample_subgraph(SampleParams(n, p, master_seed=20240814, trial_index=t))
        for k, count in connected_components(g).yk.items():
            if k >= 1:
                totals[k] = totals.get(k, 0) + count
    assert totals, "expected some non-trivial components at this density"
    for k, total in totals.items():
        mean = total / trials
        se = math.sqrt(mean / trials)
        assert mean <= expected_yk_upper(n, p, k) + 3 * se + 1e-9


def test_case4_cutoff():
    assert case4_cutoff(16, 2.0 ** -13) is None  # kappa = 1 there
    value = case4_cutoff(16, 0.05)
    assert value == pytest.approx(6 + 6 / math.log(6), rel=1e-12)
