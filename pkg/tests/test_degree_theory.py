import math

import numpy as np
import pytest

from cubespectra.degree_theory import (
    chernoff_degree_tail,
    classify_regime,
    constant_p_coefficient,
    degree_profile,
    exceed_table,
    expected_exceed_count,
    kappa,
    predicted_max_degree,
    prob_max_degree_ge,
    prob_max_degree_lt,
)


def direct_exceed_count(n, p, k):
    """E[X_k] by direct comb/power arithmetic, no log-domain tricks."""
    return 2 ** n * sum(
        math.comb(n, l) * p ** l * (1 - p) ** (n - l) for l in range(k, n + 1)
    )


def direct_term(n, p, k):
    return 2 ** n * math.comb(n, k) * p ** k * (1 - p) ** (n - k)


KAPPA_GRID = [
    (n, p)
    for n in (2, 5, 10, 16, 25)
    for p in (1e-6, 1e-3, 0.05, 0.3, 0.7, 0.95, 1.0)
]


def test_kappa_defining_property():
    for n, p in KAPPA_GRID:
        k = kappa(n, p)
        assert k is not None
        assert 0 <= k <= n
        assert direct_term(n, p, k) >= 1.0 - 1e-9
        if k < n:
            assert direct_term(n, p, k + 1) < 1.0 + 1e-9
        # the scan takes the largest qualifying k, so everything above fails
        for j in range(k + 1, n + 1):
            assert direct_term(n, p, j) < 1.0 + 1e-9


def test_kappa_frozen_values():
    assert kappa(10, 0.1) == 5
    assert kappa(20, 0.1) == 10
    assert kappa(2, 0.5) == 2
    assert kappa(12, 1.0) == 12


def test_kappa_monotone_in_p():
    values = [kappa(12, p) for p in (0.01, 0.05, 0.1, 0.3, 0.5, 0.9, 1.0)]
    assert values == sorted(values)


def test_kappa_rejects_zero_p():
    with pytest.raises(ValueError):
        kappa(10, 0.0)


def test_expected_exceed_count_matches_direct_sum():
    for n in (3, 8, 15, 30):
        for p in (0.01, 0.2, 0.5, 0.9):
            for k in range(n + 1):
                ours = expected_exceed_count(n, p, k)
                ref = direct_exceed_count(n, p, k)
                assert ours == pytest.approx(ref, rel=1e-9, abs=1e-280)


def test_expected_exceed_count_edges():
    assert expected_exceed_count(5, 0.3, 0) == 32.0
    assert expected_exceed_count(5, 0.3, 6) == 0.0
    assert expected_exceed_count(5, 0.0, 3) == 0.0
    assert expected_exceed_count(5, 1.0, 3) == 32.0
    assert expected_exceed_count(2, 0.5, 2) == pytest.approx(1.0, abs=1e-12)


def test_expected_exceed_count_monotone():
    values = [expected_exceed_count(12, 0.2, k) for k in range(14)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    by_p = [expected_exceed_count(12, p, 5) for p in (0.1, 0.2, 0.4, 0.8)]
    assert all(a <= b for a, b in zip(by_p, by_p[1:]))


def test_classify_regime_frozen_examples():
    assert classify_regime(20, 0.1) == "case1"
    assert classify_regime(20, 1e-30) == "case1"
    assert classify_regime(20, 0.2) == "case3"
    assert classify_regime(20, 0.27) == "case2"
    assert classify_regime(20, 0.9) == "case2"
    assert classify_regime(20, 1e-36) == "case4"


def test_classify_regime_boundary_ties_take_lower_case():
    n = 20
    assert classify_regime(n, n ** (-2.0 / 3.0)) == "case1"
    assert classify_regime(n, n ** (-4.0 / 9.0)) == "case2"


def test_classify_regime_degenerate_small_n():
    # At n=2 the case-1 window is empty (its lower end exceeds its upper
    # end) and moderate p falls through to the residual case.
    assert classify_regime(2, 0.7) == "case3"
    assert classify_regime(2, 0.5) == "case4"
    with pytest.raises(ValueError):
        classify_regime(1, 0.5)
    with pytest.raises(ValueError):
        classify_regime(8, 0.0)


def test_predicted_max_degree_frozen():
    assert predicted_max_degree(20, 0.1) == (9, 11)
    assert predicted_max_degree(10, 0.1) == (4, 6)
    assert predicted_max_degree(16, 0.5) == (15, 16)  # clipped at n


def test_predicted_max_degree_sharp_band():
    p = 2.0 ** (-16.0 / 3.0) / 16.0
    assert kappa(16, p) == 2
    assert predicted_max_degree(16, p) == (2, 3)


def test_predicted_max_degree_sparsest_case():
    assert classify_regime(8, 5e-9) == "case4"
    assert kappa(8, 5e-9) == 0
    assert predicted_max_degree(8, 5e-9) == (0, 0)


def test_constant_p_coefficient_values():
    assert constant_p_coefficient(0.5) == 1.0
    assert constant_p_coefficient(0.8) == 1.0
    c = constant_p_coefficient(0.25)
    assert abs(c - 0.8106) <= 5e-4


def test_constant_p_coefficient_defining_equation():
    for p in (0.05, 0.1, 0.2, 0.25, 0.3, 0.4, 0.45, 0.49):
        c = constant_p_coefficient(p)
        assert p < c < 1.0
        lhs = math.log(2) + c * math.log(p) + (1 - c) * math.log(1 - p)
        rhs = c * math.log(c) + (1 - c) * math.log(1 - c)
        assert abs(lhs - rhs) <= 1e-12


def test_constant_p_coefficient_monotone_to_one():
    grid = (0.05, 0.15, 0.25, 0.35, 0.45, 0.49)
    values = [constant_p_coefficient(p) for p in grid]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[-1] > 0.99


def test_prob_bounds_shape():
    assert prob_max_degree_lt(10, 0.1, 1) <= 1e-100
    assert prob_max_degree_ge(10, 0.1, 1) == 1.0
    assert prob_max_degree_ge(10, 0.1, 10) < 1e-6
    with pytest.raises(ValueError):
        prob_max_degree_lt(10, 0.1, 0)
    with pytest.raises(ValueError):
        prob_max_degree_ge(10, 0.1, 11)


def test_chernoff_tail_dominates_exact_binomial():
    # Valid comparison window: p >= 3/5 where the bound is monotone on [np, n].
    for n, p in ((20, 0.7), (50, 0.6), (40, 0.8)):
        for t in range(math.ceil(n * p), n + 1):
            exact = sum(
                math.comb(n, l) * p ** l * (1 - p) ** (n - l) for l in range(t, n + 1)
            )
            assert exact <= chernoff_degree_tail(n, p, t) * (1 + 1e-9)


def test_chernoff_tail_monotone_above_mean():
    values = [chernoff_degree_tail(50, 0.7, t) for t in range(35, 51)]
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_chernoff_tail_vacuous_below_mean():
    assert chernoff_degree_tail(50, 0.7, 35.0) == 1.0
    assert chernoff_degree_tail(50, 0.7, 10.0) == 1.0
    with pytest.raises(ValueError):
        chernoff_degree_tail(50, 0.0, 10.0)


def test_chernoff_tail_monte_carlo():
    rng = np.random.default_rng(20240814)
    samples = rng.binomial(40, 0.7, size=20000)
    for t in (30, 32, 35):
        freq = float((samples >= t).mean())
        bound = chernoff_degree_tail(40, 0.7, t)
        se = math.sqrt(bound * (1 - bound) / 20000)
        assert freq <= bound + 3 * se


def test_exceed_table_keys_and_consistency():
    table = exceed_table(8, 0.3)
    assert sorted(table) == list(range(9))
    for k, value in table.items():
        assert value == expected_exceed_count(8, 0.3, k)


def test_degree_profile_bundle():
    prof = degree_profile(20, 0.1)
    assert prof.kappa == 10
    assert prof.regime == "case1"
    assert prof.predicted_delta_range == (9, 11)
    assert prof.c_coefficient == constant_p_coefficient(0.1)
    prof_quarter = degree_profile(16, 0.25)
    assert abs(prof_quarter.c_coefficient - 0.8106) <= 5e-4
    one_dim = degree_profile(1, 0.5)
    assert one_dim.regime == ""
    with pytest.raises(ValueError):
        degree_profile(10, 0.0)
