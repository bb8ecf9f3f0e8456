"""How many high-degree vertices sit near any vertex of the cube.

"Near" means cube Hamming distance 1 or 2 (bit flips in Q^n, not graph
distance in the subgraph): the surrounding theory counts cube paths, and
vertices at equal cube distance are never adjacent, so the full-cube metric
is the right one even for very sparse subgraphs.  The ball around a vertex
has n + n(n-1)/2 members.

The whole-graph scans are vectorized with the same flip trick as the
adjacency operator: with ind = [degree >= threshold],

    count1 = sum_i flip_i(ind)
    count2 = (sum_i flip_i(count1) - n * ind) / 2

give the distance-1 and distance-2 tallies for every vertex at once
(flip_i(flip_i(x)) = x collapses the i = j diagonal to n * ind, and each
unordered pair of directions is hit twice).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cube_graph import HypercubeSubgraph, degree, degrees


@dataclass
class LocalityReport:
    mode: str
    a: float
    b: float | None
    threshold: int
    max_cluster: int
    argmax_vertex: int
    cluster_limit: float
    conclusion_holds: bool
    hypothesis_flags: dict[str, bool | None] = field(default_factory=dict)


def ball_size(n: int) -> int:
    return n + n * (n - 1) // 2


def high_degree_near(graph: HypercubeSubgraph, v: int, threshold: int) -> int:
    """Count of u != v with cube-distance(u, v) in {1, 2} and deg(u) >= threshold.

    Direct enumeration of the n + C(n, 2) ball; the vectorized scans below
    must agree with this on every vertex.
    """
    n = graph.n
    if not 0 <= v < graph.num_vertices:
        raise ValueError(f"vertex {v!r} out of range for n={n}")
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    count = 0
    for i in range(n):
        if degree(graph, v ^ (1 << i)) >= threshold:
            count += 1
        for j in range(i + 1, n):
            if degree(graph, v ^ (1 << i) ^ (1 << j)) >= threshold:
                count += 1
    return count


def _flipsum(x: np.ndarray, n: int) -> np.ndarray:
    y = np.zeros_like(x)
    for i in range(n):
        y += x.reshape(-1, 2, 1 << i)[:, ::-1, :].reshape(x.shape[0])
    return y


def cluster_counts(graph: HypercubeSubgraph, threshold: int) -> np.ndarray:
    """high_degree_near for every vertex at once, as an int array."""
    n = graph.n
    ind = (degrees(graph) >= threshold).astype(np.int64)
    count1 = _flipsum(ind, n)
    count2 = (_flipsum(count1, n) - n * ind) // 2
    return count1 + count2


def _scan(
    graph: HypercubeSubgraph, threshold: int, vertex_sample: int | None, sample_seed: int
) -> tuple[int, int]:
    """(max_cluster, argmax_vertex), either exactly or over a vertex sample."""
    if vertex_sample is None:
        counts = cluster_counts(graph, threshold)
        arg = int(np.argmax(counts))
        return int(counts[arg]), arg
    rng = np.random.Generator(np.random.PCG64(sample_seed))
    picks = rng.choice(graph.num_vertices, size=min(vertex_sample, graph.num_vertices), replace=False)
    best, best_v = -1, 0
    for v in sorted(int(v) for v in picks):
        c = high_degree_near(graph, v, threshold)
        if c > best:
            best, best_v = c, v
    return best, best_v


def lemma22_i_stat(
    graph: HypercubeSubgraph,
    a: float,
    b: float,
    p: float | None = None,
    vertex_sample: int | None = None,
    sample_seed: int = 0,
) -> LocalityReport:
    """Cluster statistic with degree threshold ceil(n^b) and limit n^a.

    The conclusion flag says max_cluster < n^a.  Hypothesis flags report
    a + b > 1 and the degree floor n^b >= 6np (undetermined when p is not
    supplied); the statistic itself is computed regardless.
    """
    if a <= 0 or b <= 0:
        raise ValueError("exponents a and b must be positive")
    n = graph.n
    threshold = math.ceil(n ** b)
    max_cluster, arg = _scan(graph, threshold, vertex_sample, sample_seed)
    limit = n ** a
    return LocalityReport(
        mode="i",
        a=a,
        b=b,
        threshold=threshold,
        max_cluster=max_cluster,
        argmax_vertex=arg,
        cluster_limit=limit,
        conclusion_holds=max_cluster < limit,
        hypothesis_flags={
            "a_plus_b_gt_1": a + b > 1,
            "degree_floor_6np": None if p is None else n ** b >= 6 * n * p,
        },
    )


def lemma22_ii_stat(
    graph: HypercubeSubgraph,
    a: float,
    p: float,
    vertex_sample: int | None = None,
    sample_seed: int = 0,
) -> LocalityReport:
    """Cluster statistic with threshold ceil(np + np/log n) and limit n^a/p.

    Needs the sampling density p both for the threshold and the limit; the
    density-regime hypothesis p >= n^(-2/3) is reported, not enforced.
    """
    if a <= 0:
        raise ValueError("exponent a must be positive")
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p must lie in (0, 1], got {p!r}")
    n = graph.n
    if n < 2:
        raise ValueError("threshold formula needs n >= 2 (log n > 0)")
    threshold = math.ceil(n * p + n * p / math.log(n))
    max_cluster, arg = _scan(graph, threshold, vertex_sample, sample_seed)
    limit = n ** a / p
    return LocalityReport(
        mode="ii",
        a=a,
        b=None,
        threshold=threshold,
        max_cluster=max_cluster,
        argmax_vertex=arg,
        cluster_limit=limit,
        conclusion_holds=max_cluster < limit,
        hypothesis_flags={"density_regime": p >= n ** (-2.0 / 3.0)},
    )
