"""Random subgraphs of the n-dimensional hypercube.

Vertices of the cube Q^n are the integers 0..2^n - 1; u and v are adjacent
in Q^n exactly when u ^ v is a power of two.  A subgraph keeps every vertex
and an arbitrary subset of the cube edges, stored as one n-bit adjacency
mask per vertex: bit i of masks[v] is set iff the edge {v, v ^ 2^i} is
present.  Symmetry (bit i of masks[v] == bit i of masks[v ^ 2^i]) is a
structural invariant of every constructor in this module.

The canonical identity of an edge is the pair (v, i) with bit i of v equal
to 0, and the canonical edge order is direction-major: all direction-0
edges by ascending lower endpoint, then direction 1, and so on.  Samplers
consume their uniform variate stream in exactly this order, which is what
makes sampling reproducible from a derived seed alone.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

MAX_DIMENSION = 30

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15

# Below this density the sampler switches from one uniform per potential
# edge to geometric gap-skipping over the canonical edge order.
SPARSE_SAMPLER_THRESHOLD = 2.0 ** -20

DENSE_STREAM_TAG = "bernoulli-stream/v1"
SPARSE_STREAM_TAG = "geometric-skip/v1"
RNG_NAME = "pcg64"


def _mix64(z: int) -> int:
    """splitmix64 finalizer: increment, then two multiply-xorshift rounds."""
    z = (z + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, n: int, p: float, trial_index: int) -> int:
    """Mix (master_seed, n, p, trial_index) into one 64-bit stream seed.

    p enters through the bit pattern of its float64 representation, so any
    two distinct representable probabilities yield unrelated streams.  The
    chain of splitmix64 finalizers avalanches every input bit; equal inputs
    give equal seeds on every platform.
    """
    p_bits = struct.unpack("<Q", struct.pack("<d", float(p)))[0]
    h = _mix64(master_seed & _MASK64)
    h = _mix64(h ^ (int(n) & _MASK64))
    h = _mix64(h ^ p_bits)
    h = _mix64(h ^ (int(trial_index) & _MASK64))
    return h


@dataclass(frozen=True)
class SampleParams:
    """Everything that determines one sampled graph."""

    n: int
    p: float
    master_seed: int = 0
    trial_index: int = 0

    def seed(self) -> int:
        return derive_seed(self.master_seed, self.n, self.p, self.trial_index)


@dataclass
class HypercubeSubgraph:
    """Spanning subgraph of Q^n as per-vertex adjacency bit masks."""

    n: int
    masks: np.ndarray
    edge_count: int

    @property
    def num_vertices(self) -> int:
        return 1 << self.n


def _check_dimension(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension n must be an integer in [1, {MAX_DIMENSION}], got {n!r}")


def _lower_endpoints(n: int, i: int) -> np.ndarray:
    """Vertices with bit i == 0, ascending; index c is the canonical rank."""
    c = np.arange(1 << (n - 1), dtype=np.uint32)
    low = c & np.uint32((1 << i) - 1)
    return ((c >> np.uint32(i)) << np.uint32(i + 1)) | low


def full_cube(n: int) -> HypercubeSubgraph:
    """Q^n itself: every mask has all n low bits set."""
    _check_dimension(n)
    masks = np.full(1 << n, (1 << n) - 1, dtype=np.uint32)
    return HypercubeSubgraph(n=n, masks=masks, edge_count=n << (n - 1))


def sample_subgraph(params: SampleParams) -> HypercubeSubgraph:
    """Keep each cube edge independently with probability p.

    The dense path draws one uniform per canonical edge, in canonical order
    (tag "bernoulli-stream/v1").  For p below SPARSE_SAMPLER_THRESHOLD the
    sampler instead walks the canonical edge order with geometric gaps,
    consuming one uniform per gap (tag "geometric-skip/v1").  Both paths are
    pure functions of the derived seed; the path choice depends only on p.
    """
    _check_dimension(params.n)
    p = float(params.p)
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise ValueError(f"edge probability must lie in [0, 1], got {params.p!r}")
    n = params.n
    size = 1 << n
    masks = np.zeros(size, dtype=np.uint32)
    if p == 0.0:
        return HypercubeSubgraph(n=n, masks=masks, edge_count=0)
    rng = np.random.Generator(np.random.PCG64(params.seed()))
    if p < SPARSE_SAMPLER_THRESHOLD:
        return _sample_sparse(n, p, rng, masks)
    half = size >> 1
    edge_count = 0
    for i in range(n):
        hits = rng.random(half) < p
        chosen = _lower_endpoints(n, i)[hits]
        bit = np.uint32(1 << i)
        masks[chosen] |= bit
        masks[chosen ^ bit] |= bit
        edge_count += int(hits.sum())
    return HypercubeSubgraph(n=n, masks=masks, edge_count=edge_count)


def _expand_rank(c: int, i: int) -> int:
    """Inverse of the canonical rank: c-th vertex with bit i == 0."""
    return ((c >> i) << (i + 1)) | (c & ((1 << i) - 1))


def _sample_sparse(n: int, p: float, rng: np.random.Generator, masks: np.ndarray) -> HypercubeSubgraph:
    half = 1 << (n - 1)
    total = n * half
    log_skip = math.log1p(-p)
    edge_count = 0
    pos = 0
    while True:
        u = rng.random()
        if u == 0.0:
            break
        pos += int(math.log(u) / log_skip)
        if pos >= total:
            break
        i, c = divmod(pos, half)
        v = _expand_rank(c, i)
        bit = np.uint32(1 << i)
        masks[v] |= bit
        masks[v ^ (1 << i)] |= bit
        edge_count += 1
        pos += 1
    return HypercubeSubgraph(n=n, masks=masks, edge_count=edge_count)


def degree(graph: HypercubeSubgraph, v: int) -> int:
    if not 0 <= v < graph.num_vertices:
        raise ValueError(f"vertex {v!r} out of range for n={graph.n}")
    return int(np.bitwise_count(graph.masks[v]))


def degrees(graph: HypercubeSubgraph) -> np.ndarray:
    """Degree of every vertex, as an int array indexed by vertex."""
    return np.bitwise_count(graph.masks).astype(np.int64)


def max_degree(graph: HypercubeSubgraph) -> int:
    return int(degrees(graph).max())


def degree_histogram(graph: HypercubeSubgraph) -> dict[int, int]:
    counts = np.bincount(degrees(graph))
    return {int(d): int(c) for d, c in enumerate(counts) if c}


def to_edge_list(graph: HypercubeSubgraph) -> list[tuple[int, int]]:
    """All edges as (v, w) with v < w, sorted lexicographically."""
    vertex_bits = np.arange(graph.num_vertices, dtype=np.uint32)
    lower = graph.masks & ~vertex_bits
    vs, ws = [], []
    for i in range(graph.n):
        sel = np.nonzero((lower >> np.uint32(i)) & np.uint32(1))[0]
        vs.append(sel)
        ws.append(sel ^ (1 << i))
    v_all = np.concatenate(vs) if vs else np.empty(0, dtype=np.int64)
    w_all = np.concatenate(ws) if ws else np.empty(0, dtype=np.int64)
    order = np.lexsort((w_all, v_all))
    return [(int(v), int(w)) for v, w in zip(v_all[order], w_all[order])]


def from_edge_list(n: int, edges: list[tuple[int, int]]) -> HypercubeSubgraph:
    """Build a graph from (v, w) pairs; each must be a cube edge with v < w."""
    _check_dimension(n)
    size = 1 << n
    masks = np.zeros(size, dtype=np.uint32)
    for v, w in edges:
        v, w = int(v), int(w)
        if not (0 <= v < size and 0 <= w < size):
            raise ValueError(f"edge ({v}, {w}) has a vertex out of range for n={n}")
        if v >= w:
            raise ValueError(f"edge ({v}, {w}) must be listed with v < w")
        d = v ^ w
        if d & (d - 1):
            raise ValueError(f"({v}, {w}) is not a cube edge: endpoints differ in more than one bit")
        if masks[v] & d:
            raise ValueError(f"duplicate edge ({v}, {w})")
        masks[v] |= np.uint32(d)
        masks[w] |= np.uint32(d)
    return HypercubeSubgraph(n=n, masks=masks, edge_count=len(edges))


def write_edge_file(graph: HypercubeSubgraph, path) -> None:
    """Plain text edge list: first line "n m", then one "v w" line per edge."""
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{v} {w}" for v, w in to_edge_list(graph))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_edge_file(path) -> HypercubeSubgraph:
    with open(path, "r", encoding="ascii") as fh:
        raw = fh.read().split("\n")
    lines = [ln for ln in (s.strip() for s in raw) if ln]
    if not lines:
        raise ValueError(f"{path}: empty edge file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"{path}:1: header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"{path}:1: header must be two integers") from None
    if len(lines) - 1 != m:
        raise ValueError(f"{path}: header promises {m} edges, file has {len(lines) - 1}")
    edges = []
    for ln_no, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{ln_no}: expected 'v w'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"{path}:{ln_no}: expected two integers") from None
    return from_edge_list(n, edges)


def validate_graph(graph: HypercubeSubgraph) -> None:
    """Check the structural invariants; raises ValueError on any violation."""
    _check_dimension(graph.n)
    size = 1 << graph.n
    if graph.masks.shape != (size,):
        raise ValueError(f"masks must have shape ({size},), got {graph.masks.shape}")
    if int(graph.masks.max(initial=0)) >> graph.n:
        raise ValueError("mask bits set beyond dimension n")
    for i in range(graph.n):
        bits = (graph.masks >> np.uint32(i)) & np.uint32(1)
        flipped = bits.reshape(-1, 2, 1 << i)[:, ::-1, :].reshape(size)
        if not np.array_equal(bits, flipped):
            raise ValueError(f"adjacency masks are asymmetric in direction {i}")
    total = int(degrees(graph).sum())
    if total != 2 * graph.edge_count:
        raise ValueError(f"edge_count {graph.edge_count} != popcount sum / 2 = {total // 2}")
