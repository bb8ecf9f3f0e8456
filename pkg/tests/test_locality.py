import math

import pytest

from cubespectra.cube_graph import SampleParams, full_cube, sample_subgraph
from cubespectra.locality_stats import (
    ball_size,
    cluster_counts,
    high_degree_near,
    lemma22_i_stat,
    lemma22_ii_stat,
)


def test_ball_size():
    # punctured ball: distance-1 and distance-2 vertices, center excluded
    for n in range(1, 12):
        assert ball_size(n) == n + math.comb(n, 2)


def test_full_cube_clusters_fill_the_ball():
    g = full_cube(6)
    counts = cluster_counts(g, threshold=6)
    assert (counts == ball_size(6)).all()
    report = lemma22_i_stat(g, a=2.5, b=1.0)
    assert report.threshold == 6
    assert report.max_cluster == ball_size(6)
    assert report.argmax_vertex == 0  # first argmax wins


def test_vectorized_scan_matches_enumeration():
    for seed in range(15):
        n = 5 + seed % 3
        g = sample_subgraph(SampleParams(n, 0.4, master_seed=seed))
        for threshold in (1, 2, n // 2, n):
            counts = cluster_counts(g, threshold)
            for v in range(0, g.num_vertices, 5):
                assert counts[v] == high_degree_near(g, v, threshold)


def test_cluster_counts_monotone_in_threshold():
    g = sample_subgraph(SampleParams(8, 0.5, master_seed=2))
    previous = cluster_counts(g, 1)
    for threshold in range(2, 9):
        current = cluster_counts(g, threshold)
        assert (current <= previous).all()
        previous = current


def test_threshold_above_n_empties_clusters():
    g = sample_subgraph(SampleParams(6, 0.9, master_seed=1))
    assert (cluster_counts(g, 7) == 0).all()


def test_sampled_mode_is_consistent():
    g = sample_subgraph(SampleParams(10, 0.3, master_seed=4))
    full = lemma22_i_stat(g, 0.8, 0.4)
    sampled = lemma22_i_stat(g, 0.8, 0.4, vertex_sample=128, sample_seed=7)
    again = lemma22_i_stat(g, 0.8, 0.4, vertex_sample=128, sample_seed=7)
    assert sampled.max_cluster <= full.max_cluster
    assert sampled.max_cluster == again.max_cluster
    assert sampled.argmax_vertex == again.argmax_vertex


def test_mode_i_hypothesis_fails_at_quoted_density(thresholds):
    cfg = thresholds["lemma22"]["mode_i_hypothesis_fails"]
    g = sample_subgraph(SampleParams(cfg["n"], cfg["p"], master_seed=20240814))
    report = lemma22_i_stat(g, cfg["a"], cfg["b"], p=cfg["p"])
    assert report.hypothesis_flags["a_plus_b_gt_1"] is True
    assert report.hypothesis_flags[cfg["failing_flag"]] is False
    # With the degree floor failing, the cluster statistic blows past n^a.
    assert report.max_cluster >= report.cluster_limit


def test_mode_i_conclusion_rate_in_hypothesis(thresholds):
    cfg = thresholds["lemma22"]["mode_i_in_hypothesis"]
    hits = 0
    for trial in range(30):
        g = sample_subgraph(
            SampleParams(cfg["n"], cfg["p"], master_seed=20240814, trial_index=trial)
        )
        report = lemma22_i_stat(g, cfg["a"], cfg["b"], p=cfg["p"])
        assert report.hypothesis_flags["a_plus_b_gt_1"] is True
        assert report.hypothesis_flags["degree_floor_6np"] is True
        hits += report.conclusion_holds
    assert hits / 30 >= cfg["min_rate"]


def test_mode_i_flag_undetermined_without_p():
    g = sample_subgraph(SampleParams(8, 0.2, master_seed=3))
    report = lemma22_i_stat(g, 0.8, 0.4)
    assert report.hypothesis_flags["degree_floor_6np"] is None


def test_mode_ii_small_exponent_demonstration(thresholds):
    cfg = thresholds["lemma22"]["mode_ii_small_exponent"]
    g = sample_subgraph(SampleParams(cfg["n"], cfg["p"], master_seed=20240814))
    report = lemma22_ii_stat(g, cfg["a"], cfg["p"])
    assert report.threshold == 11  # ceil(np + np/log n) at n=16, p=0.5
    assert report.hypothesis_flags["density_regime"] is True
    assert report.cluster_limit == pytest.approx(16 ** cfg["a"] / 0.5, rel=1e-12)
    # n^a/p is ~2.3 while real clusters are an order of magnitude larger;
    # the asymptotic statement is out of reach at this scale.
    assert report.max_cluster > report.cluster_limit
    assert not report.conclusion_holds


def test_mode_ii_conclusion_rate_in_hypothesis(thresholds):
    cfg = thresholds["lemma22"]["mode_ii_in_hypothesis"]
    hits = 0
    for trial in range(30):
        g = sample_subgraph(
            SampleParams(cfg["n"], cfg["p"], master_seed=20240814, trial_index=trial)
        )
        report = lemma22_ii_stat(g, cfg["a"], cfg["p"])
        assert report.hypothesis_flags["density_regime"] is True
        hits += report.conclusion_holds
    assert hits / 30 >= cfg["min_rate"]


def test_exponent_validation():
    g = sample_subgraph(SampleParams(4, 0.5, master_seed=0))
    with pytest.raises(ValueError):
        lemma22_i_stat(g, -1.0, 0.5)
    with pytest.raises(ValueError):
        lemma22_i_stat(g, 0.5, 0.0)
    with pytest.raises(ValueError):
        lemma22_ii_stat(g, 0.5, 0.0)
