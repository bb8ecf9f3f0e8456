"""Deterministic eigenvalue bounds for cube subgraphs.

Everything here is elementary counting on top of the degree data: the
max-degree / average-degree sandwich, the edge-count and two-walk bounds,
and the bipartite degree-product bound.  All of them are computed in integer
arithmetic and converted to reals only at the last step, so the companion
invariant tests are immune to accumulation drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cube_graph import HypercubeSubgraph, degrees
from .eigensolve import apply_adjacency


@dataclass
class BoundReport:
    sqrt_max_degree: float
    avg_degree: float
    max_degree_bound: float
    sqrt_edges: float
    walk2_bound: float
    prediction: float | None = None


def sandwich_bounds(graph: HypercubeSubgraph) -> tuple[float, float]:
    """(max(sqrt(Delta), 2m/2^n), Delta): lambda1 always lies between them."""
    delta = int(degrees(graph).max())
    avg = 2.0 * graph.edge_count / graph.num_vertices
    return max(math.sqrt(delta), avg), float(delta)


def walk2_max(graph: HypercubeSubgraph) -> int:
    """max over v of the number of two-step walks starting at v.

    W2(G, v) = sum of degree(u) over neighbors u of v, evaluated for all
    vertices at once by pushing the integer degree vector through the
    adjacency operator.
    """
    deg = degrees(graph)
    w2 = apply_adjacency(graph.masks, graph.n, deg)
    return int(w2.max())


def parity_sides(n: int) -> np.ndarray:
    """The canonical 2-coloring of Q^n: True on odd-popcount vertices."""
    return (np.bitwise_count(np.arange(1 << n, dtype=np.uint32)) & 1).astype(bool)


def bipartite_product_bound(
    graph: HypercubeSubgraph, side_mask: np.ndarray | Callable[[int], bool]
) -> float:
    """sqrt(Delta1 * Delta2) for the two sides of a proper 2-coloring.

    side_mask is either a boolean array over vertices or a predicate on the
    vertex index.  Every present edge must cross the boundary; cube edges
    always flip popcount parity, so parity_sides(n) is a valid coloring for
    any cube subgraph.
    """
    size = graph.num_vertices
    if callable(side_mask):
        side = np.fromiter((bool(side_mask(v)) for v in range(size)), dtype=bool, count=size)
    else:
        side = np.asarray(side_mask, dtype=bool)
        if side.shape != (size,):
            raise ValueError(f"side mask must cover all {size} vertices")
    for i in range(graph.n):
        present = ((graph.masks >> np.uint32(i)) & np.uint32(1)).astype(bool)
        flipped = side.reshape(-1, 2, 1 << i)[:, ::-1, :].reshape(size)
        same_side = present & (side == flipped)
        if same_side.any():
            v = int(np.nonzero(same_side)[0][0])
            raise ValueError(f"edge ({v}, {v ^ (1 << i)}) has both endpoints on one side")
    deg = degrees(graph)
    delta1 = int(deg[side].max(initial=0))
    delta2 = int(deg[~side].max(initial=0))
    return math.sqrt(delta1 * delta2)


def sqrt_edges_bound(graph: HypercubeSubgraph) -> float:
    """sqrt(m); attained exactly by stars."""
    return math.sqrt(graph.edge_count)


def common_cube_neighbors(u: int, v: int, n: int) -> int:
    """Common neighbors of u and v in the full cube Q^n.

    n when u = v, exactly the two midpoints when the Hamming distance is 2,
    and none otherwise (odd distances by parity, distance >= 4 trivially).
    """
    size = 1 << n
    if not (0 <= u < size and 0 <= v < size):
        raise ValueError(f"vertices ({u}, {v}) out of range for n={n}")
    dist = int(u ^ v).bit_count()
    if dist == 0:
        return n
    return 2 if dist == 2 else 0


def theorem_prediction(delta: int, n: int, p: float) -> float:
    """max(sqrt(Delta), n p): the two-regime prediction for lambda1."""
    if delta < 0:
        raise ValueError("delta must be non-negative")
    return max(math.sqrt(delta), n * p)


def bound_report(graph: HypercubeSubgraph, p: float | None = None) -> BoundReport:
    """All scalar bounds for one graph; prediction only when p is known."""
    delta = int(degrees(graph).max())
    return BoundReport(
        sqrt_max_degree=math.sqrt(delta),
        avg_degree=2.0 * graph.edge_count / graph.num_vertices,
        max_degree_bound=float(delta),
        sqrt_edges=sqrt_edges_bound(graph),
        walk2_bound=math.sqrt(walk2_max(graph)),
        prediction=None if p is None else theorem_prediction(delta, graph.n, p),
    )
