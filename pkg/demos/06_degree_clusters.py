"""High-degree vertices do not crowd into small balls.

For each vertex v the statistics count vertices of large degree inside
the radius-2 ball around v (the vertex itself excluded).  Mode i uses
the degree threshold ceil(n^b) and expects fewer than n^a qualifying
vertices per ball when a + b > 1 and n^b >= 6np.  Mode ii uses the
threshold ceil(np + np/log n) and expects fewer than n^a / p.

Run with:  python3 demos/06_degree_clusters.py
"""

from fractions import Fraction

from cubespectra import (
    SampleParams,
    ball_size,
    cluster_counts,
    full_cube,
    high_degree_near,
    lemma22_i_stat,
    lemma22_ii_stat,
    sample_subgraph,
)


def show(report) -> None:
    print(f"  degree threshold = {report.threshold}, "
          f"largest cluster = {report.max_cluster} (at vertex {report.argmax_vertex}), "
          f"allowed = {report.cluster_limit:g}")
    print(f"  hypothesis flags = {report.hypothesis_flags}")
    print(f"  conclusion holds = {report.conclusion_holds}")


def main() -> None:
    print("== Radius-2 balls in the cube ==")
    for n in (6, 10, 16):
        print(f"n={n:2d}: ball around a vertex holds {ball_size(n)} others")

    print()
    print("== Counting per vertex on the full cube ==")
    cube = full_cube(6)
    counts = cluster_counts(cube, threshold=6)
    print(f"full Q^6, threshold 6: every vertex sees "
          f"{counts.min()}..{counts.max()} qualifying vertices "
          f"(ball size {ball_size(6)})")
    print(f"high_degree_near(vertex 0) = {high_degree_near(cube, 0, 6)}")

    print()
    print("== Mode i in its intended density range ==")
    n, p = 16, 0.02
    graph = sample_subgraph(SampleParams(n, p, master_seed=41))
    report = lemma22_i_stat(graph, a=0.8, b=0.4, p=p)
    print(f"n={n}, p={p}, a=0.8, b=0.4 (cluster limit n^a = {16 ** 0.8:.1f}):")
    show(report)

    print()
    print("== Mode i outside its range: the degree floor fails ==")
    n, p = 16, 0.1
    graph = sample_subgraph(SampleParams(n, p, master_seed=41))
    report = lemma22_i_stat(graph, a=0.8, b=0.4, p=p)
    print(f"n={n}, p={p}, a=0.8, b=0.4 (now 6np = {6 * n * p:.1f} exceeds "
          f"n^b = {16 ** 0.4:.1f}):")
    show(report)

    print()
    print("== Mode ii with a healthy exponent ==")
    n, p = 16, 0.5
    graph = sample_subgraph(SampleParams(n, p, master_seed=43))
    report = lemma22_ii_stat(graph, a=1.3, p=p)
    print(f"n={n}, p={p}, a=1.3 (cluster limit n^a/p = {16 ** 1.3 / p:.1f}):")
    show(report)

    print()
    print("== Mode ii with a tiny exponent caps almost nothing ==")
    a = float(Fraction(1, 18))
    report = lemma22_ii_stat(graph, a=a, p=p)
    print(f"n={n}, p={p}, a=1/18 (cluster limit n^a/p = {16 ** a / p:.2f}):")
    show(report)

    print()
    print("== Sampled-vertex scans agree in distribution ==")
    graph = sample_subgraph(SampleParams(16, 0.5, master_seed=47))
    full = lemma22_ii_stat(graph, a=1.3, p=0.5)
    sampled = lemma22_ii_stat(graph, a=1.3, p=0.5, vertex_sample=4096, sample_seed=1)
    print(f"full scan max cluster = {full.max_cluster}, "
          f"4096-vertex sample max cluster = {sampled.max_cluster}")


if __name__ == "__main__":
    main()
