"""Largest adjacency eigenvalue, matrix-free.

The adjacency operator of a cube subgraph acts on x in R^(2^n) by

    (A x)[v] = sum over set bits i of masks[v] of x[v ^ 2^i],

which needs no stored matrix: direction i contributes bit_i(masks) * flip_i(x)
where flip_i reverses bit i of the index.  Because the masks are symmetric,
bit_i(masks)[v] == bit_i(masks)[v ^ 2^i], so gating before or after the flip
is equivalent; we gate after, accumulating directions in ascending order so
every entry sees a fixed floating-point summation order.

lambda1 comes from Lanczos with full reorthogonalization.  These spectra are
symmetric about zero on bipartite pieces (+/- lambda1 pairs), which defeats
naive power iteration; the Ritz values of the Lanczos tridiagonal matrix have
no such problem.  A dense cyclic-Jacobi routine serves as the independent
small-graph oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numba import njit
from scipy.linalg import eigh_tridiagonal

from .cube_graph import HypercubeSubgraph

DENSE_ORACLE_MAX_N = 10
JACOBI_OFF_NORM = 1e-12


@dataclass(frozen=True)
class SolverConfig:
    tol: float = 1e-10
    max_iter: int = 500
    start_seed: int = 0x5EED
    reorthogonalize: bool = True


@dataclass
class SpectralResult:
    lambda1: float
    iterations: int
    residual: float
    converged: bool
    vector: np.ndarray | None = None


def _flip(x: np.ndarray, i: int) -> np.ndarray:
    """x reindexed by v -> v ^ 2^i."""
    return x.reshape(-1, 2, 1 << i)[:, ::-1, :].reshape(x.shape[0])


def apply_adjacency(masks: np.ndarray, n: int, x: np.ndarray) -> np.ndarray:
    """A x for any numeric dtype; direction loop ascending, so deterministic."""
    y = np.zeros_like(x)
    for i in range(n):
        bit = ((masks >> np.uint32(i)) & np.uint32(1)).astype(x.dtype)
        y += bit * _flip(x, i)
    return y


def matvec(graph: HypercubeSubgraph, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (graph.num_vertices,):
        raise ValueError(f"vector length {x.shape} does not match 2^{graph.n} vertices")
    return apply_adjacency(graph.masks, graph.n, x)


def start_vector(size: int, seed: int) -> np.ndarray:
    """Strictly positive deterministic start: all-ones mixed with noise.

    Positivity guarantees overlap with the top (Perron) eigenvector of every
    component, so lambda1 is reachable from this start on any graph.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    v = 1.0 + rng.random(size)
    return v / np.linalg.norm(v)


def _top_ritz(alphas: list[float], betas: list[float]) -> tuple[float, np.ndarray]:
    """Largest eigenvalue of the Lanczos tridiagonal matrix and its eigenvector."""
    k = len(alphas)
    if k == 1:
        return alphas[0], np.ones(1)
    w, y = eigh_tridiagonal(
        np.asarray(alphas), np.asarray(betas), select="i", select_range=(k - 1, k - 1)
    )
    return float(w[0]), y[:, 0]


def lanczos_core(
    apply: Callable[[np.ndarray], np.ndarray],
    start: np.ndarray,
    tol: float,
    max_iter: int,
    reorthogonalize: bool,
    space_dim: int,
) -> SpectralResult:
    """Lanczos on an arbitrary symmetric operator from a given start vector.

    space_dim caps the Krylov dimension (the invariant subspace holding the
    start vector); reaching it means the factorization is exact and only the
    residual check decides convergence.  Convergence otherwise requires the
    top Ritz value to stagnate below tol AND the explicitly recomputed
    residual ||A x - theta x|| to pass tol * max(1, theta).
    """
    size = start.shape[0]
    limit = min(max_iter, space_dim)
    capacity = min(limit, 32)
    basis = np.empty((capacity, size))
    basis[0] = start
    alphas: list[float] = []
    betas: list[float] = []
    theta_prev = None

    k = 0
    while True:
        q = basis[k]
        r = apply(q)
        alpha = float(q @ r)
        r -= alpha * q
        if k > 0:
            r -= betas[-1] * basis[k - 1]
        if reorthogonalize:
            active = basis[: k + 1]
            r -= active.T @ (active @ r)
            r -= active.T @ (active @ r)
        alphas.append(alpha)
        k += 1

        theta, _ = _top_ritz(alphas, betas)
        beta = float(np.linalg.norm(r))
        scale = max(1.0, abs(theta))
        stagnated = theta_prev is not None and abs(theta - theta_prev) < tol * scale
        breakdown = beta <= 1e-14 * scale
        theta_prev = theta

        if stagnated or breakdown or k == limit:
            theta, y = _top_ritz(alphas, betas)
            x = basis[:k].T @ y
            x /= np.linalg.norm(x)
            residual = float(np.linalg.norm(apply(x) - theta * x))
            converged = residual <= tol * max(1.0, abs(theta))
            if converged or breakdown or k == limit:
                return SpectralResult(theta, k, residual, converged, x)

        if k == capacity:
            capacity = min(limit, capacity * 2)
            grown = np.empty((capacity, size))
            grown[:k] = basis[:k]
            basis = grown
        basis[k] = r / beta
        betas.append(beta)


def lanczos_lambda1(
    graph: HypercubeSubgraph,
    config: SolverConfig = SolverConfig(),
    return_vector: bool = False,
) -> SpectralResult:
    """Largest eigenvalue of the adjacency operator of the whole graph."""
    if config.tol <= 0 or config.max_iter < 1:
        raise ValueError("solver needs tol > 0 and max_iter >= 1")
    size = graph.num_vertices
    if graph.edge_count == 0:
        vec = np.full(size, size ** -0.5) if return_vector else None
        return SpectralResult(0.0, 0, 0.0, True, vec)
    result = lanczos_core(
        apply=lambda x: matvec(graph, x),
        start=start_vector(size, config.start_seed),
        tol=config.tol,
        max_iter=config.max_iter,
        reorthogonalize=config.reorthogonalize,
        space_dim=size,
    )
    if not return_vector:
        result.vector = None
    return result


@njit(cache=True)
def _jacobi_diagonalize(a: np.ndarray, off_target: float, max_sweeps: int) -> float:
    """Cyclic Jacobi sweeps in place until the off-diagonal Frobenius norm
    is at most off_target; returns the final off-diagonal norm."""
    size = a.shape[0]
    target2 = off_target * off_target
    skip = off_target / (2.0 * size)
    for _ in range(max_sweeps):
        off2 = 0.0
        for p in range(size - 1):
            for q in range(p + 1, size):
                off2 += 2.0 * a[p, q] * a[p, q]
        if off2 <= target2:
            return np.sqrt(off2)
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(size):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(size):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
    off2 = 0.0
    for p in range(size - 1):
        for q in range(p + 1, size):
            off2 += 2.0 * a[p, q] * a[p, q]
    return np.sqrt(off2)


def jacobi_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi, non-increasing."""
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if a.shape[0] == 0:
        return np.empty(0)
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    off = _jacobi_diagonalize(a, JACOBI_OFF_NORM, 60)
    if off > JACOBI_OFF_NORM:
        raise ArithmeticError(f"Jacobi stalled at off-diagonal norm {off:.3e}")
    return np.sort(np.diag(a))[::-1]


def dense_adjacency(graph: HypercubeSubgraph) -> np.ndarray:
    """The 2^n x 2^n 0/1 adjacency matrix (small n only)."""
    size = graph.num_vertices
    a = np.zeros((size, size))
    idx = np.arange(size)
    for i in range(graph.n):
        present = ((graph.masks >> np.uint32(i)) & np.uint32(1)).astype(bool)
        a[idx[present], idx[present] ^ (1 << i)] = 1.0
    return a


def dense_spectrum(graph: HypercubeSubgraph) -> np.ndarray:
    """Full spectrum via the Jacobi oracle; restricted to n <= 10."""
    if graph.n > DENSE_ORACLE_MAX_N:
        raise ValueError(f"dense oracle is limited to n <= {DENSE_ORACLE_MAX_N}, got n={graph.n}")
    return jacobi_eigenvalues(dense_adjacency(graph))
