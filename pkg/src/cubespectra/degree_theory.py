"""Extreme-degree theory for G(Q^n, p).

The central quantity is

    E[X_k] = 2^n * sum over l >= k of C(n, l) p^l (1-p)^(n-l),

the expected number of vertices with degree at least k.  kappa(n) is the
largest k whose single binomial term 2^n C(n,k) p^k (1-p)^(n-k) still
reaches 1; the maximum degree concentrates on {kappa-1, ..., kappa+1}.
All binomial arithmetic runs in log domain because these terms overflow
and underflow long before n reaches the supported range.

Logarithms are natural throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

REGIME_LABELS = ("case1", "case2", "case3", "case4")


@dataclass
class DegreeProfile:
    n: int
    p: float
    kappa: int | None
    regime: str
    predicted_delta_range: tuple[int, int] | None
    c_coefficient: float


def _check_np(n: int, p: float) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise ValueError(f"p must lie in [0, 1], got {p!r}")


def _log_binom_term(n: int, k: int, log_p: float, log_q: float) -> float:
    log_c = math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    return log_c + k * log_p + (n - k) * log_q


def expected_exceed_count(n: int, p: float, k: int) -> float:
    """E[X_k]: expected number of vertices of degree >= k."""
    _check_np(n, p)
    if not 0 <= k <= n + 1:
        raise ValueError(f"k must lie in [0, n+1], got {k}")
    if k <= 0:
        return float(2 ** n)
    if k == n + 1:
        return 0.0
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return float(2 ** n)
    log_p, log_q = math.log(p), math.log1p(-p)
    tail = [_log_binom_term(n, l, log_p, log_q) for l in range(k, n + 1)]
    return float(math.exp(n * math.log(2) + logsumexp(tail)))


def kappa(n: int, p: float) -> int | None:
    """max{k : 2^n C(n,k) p^k (1-p)^(n-k) >= 1}, or None if no k qualifies.

    For any 0 < p <= 1 the modal binomial term already satisfies
    2^n P(Bin(n,p) = mode) >= 2^n / (n+1) >= 1, so the None branch is
    unreachable for legal inputs; it is kept as a first-class result
    because the definition permits it.
    """
    _check_np(n, p)
    if p == 0.0:
        raise ValueError("kappa requires p > 0")
    if p == 1.0:
        return n
    log_p, log_q = math.log(p), math.log1p(-p)
    base = n * math.log(2)
    best = None
    for k in range(n + 1):
        if base + _log_binom_term(n, k, log_p, log_q) >= 0.0:
            best = k
    return best


def classify_regime(n: int, p: float) -> str:
    """The density case containing p.

    Cases are checked in numeric order, so a p lying on a shared boundary
    gets the lower-numbered label.  The case-1 window can be empty at very
    small n (its lower end exceeds its upper end for n = 2); the ordered
    checks handle that without special casing.
    """
    if n < 2:
        raise ValueError(f"regime classification needs n >= 2, got {n}")
    if not 0.0 < p <= 1.0 or math.isnan(p):
        raise ValueError(f"p must lie in (0, 1], got {p!r}")
    tiny = math.exp(-math.log(n) ** 4)
    low = n ** (-2.0 / 3.0)
    high = n ** (-4.0 / 9.0)
    if tiny <= p <= low:
        return "case1"
    if p >= high:
        return "case2"
    if low <= p <= high:
        return "case3"
    return "case4"


def predicted_max_degree(
    n: int,
    p: float,
    band_factor: float = 2.0,
    lower_margin: float = 10.0,
    upper_margin: float = 0.1,
) -> tuple[int, int] | None:
    """Inclusive integer interval predicted to contain the max degree.

    The sharp sub-cases only apply when their finite-n evidence is present:

    * {k-1, k} when p sits within band_factor of 2^(-n/k)/n for some k,
      the scanned kappa already lies in {k-1, k}, and the expectations are
      decisive (E[X_{k-1}] >= lower_margin, E[X_{k+1}] <= upper_margin);
    * {kappa} when p is in the sparsest density case, the closed form
      round(n log 2 / (log(1/p) - log n)) agrees with the scanned kappa,
      and the same expectation margins hold at kappa;
    * otherwise the conservative [kappa-1, kappa+1], clipped to [0, n].

    Without the kappa-consistency guard the band test misfires at desk
    scale (e.g. n=20, p=0.025 lands in the k=20 band while kappa is 6).
    """
    k_hat = kappa(n, p)
    if k_hat is None:
        return None

    def margins_ok(k: int) -> bool:
        below = expected_exceed_count(n, p, max(0, k - 1))
        above = expected_exceed_count(n, p, min(n + 1, k + 1))
        return below >= lower_margin and above <= upper_margin

    log_band = math.log(band_factor)
    best = None
    for k in range(1, n + 1):
        center = 2.0 ** (-n / k) / n
        gap = abs(math.log(p / center))
        if gap <= log_band + 1e-12 and k_hat in (k - 1, k):
            if best is None or gap < best[0]:
                best = (gap, k)
    if best is not None and margins_ok(best[1]):
        k = best[1]
        return (k - 1, k)

    if n >= 2 and classify_regime(n, p) == "case4":
        denom = math.log(1.0 / p) - math.log(n)
        if denom > 0:
            k_form = math.floor(n * math.log(2) / denom)
            if k_form == k_hat and margins_ok(k_hat):
                return (k_hat, k_hat)

    return (max(0, k_hat - 1), min(n, k_hat + 1))


def _xlogx(x: float) -> float:
    return 0.0 if x == 0.0 else x * math.log(x)


def constant_p_coefficient(p: float) -> float:
    """The degree coefficient c with Delta ~ c n for constant p.

    Root in (p, 1) of

        log 2 + c log p + (1-c) log(1-p) = c log c + (1-c) log(1-c),

    found by bisection until the substituted residual is at most 1e-12.
    For p >= 1/2 the maximum degree is full-scale and c = 1.
    """
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p must lie in (0, 1], got {p!r}")
    if p >= 0.5:
        return 1.0

    log_p, log_q = math.log(p), math.log1p(-p)

    def residual(c: float) -> float:
        return math.log(2) + c * log_p + (1 - c) * log_q - _xlogx(c) - _xlogx(1 - c)

    lo, hi = p, 1.0
    c = 0.5 * (lo + hi)
    for _ in range(200):
        c = 0.5 * (lo + hi)
        r = residual(c)
        if abs(r) <= 1e-12 or c <= lo or c >= hi:
            break
        if r > 0:
            lo = c
        else:
            hi = c
    if abs(residual(c)) > 1e-12:
        raise ArithmeticError(f"bisection stalled at c={c!r}, residual {residual(c):.3e}")
    return c


def prob_max_degree_lt(n: int, p: float, k: int) -> float:
    """Upper bound exp(-E[X_k]/2) on Pr[max degree < k]."""
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, n], got {k}")
    return min(1.0, math.exp(-expected_exceed_count(n, p, k) / 2.0))


def prob_max_degree_ge(n: int, p: float, k: int) -> float:
    """Markov upper bound min(1, E[X_k]) on Pr[max degree >= k]."""
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, n], got {k}")
    return min(1.0, expected_exceed_count(n, p, k))


def chernoff_degree_tail(n: int, p: float, t: float) -> float:
    """Upper bound on Pr[degree of one vertex >= t] for Bin(n, p) degrees.

    exp(-(t-np)^2/(2np) + (t-np)^3/(2(np)^2)), clamped to [0, 1]; returns
    the vacuous 1 when t is below the mean.  The cubic correction makes
    this non-increasing in t only while t - np <= 2np/3, so grid tests of
    monotonicity must stay in that window (any p >= 3/5 covers [np, n]).
    """
    _check_np(n, p)
    mean = n * p
    if mean <= 0.0:
        raise ValueError("bound requires np > 0")
    if t < mean:
        return 1.0
    a = t - mean
    exponent = -a * a / (2.0 * mean) + a ** 3 / (2.0 * mean * mean)
    if exponent >= 0.0:
        return 1.0
    return math.exp(exponent)


def exceed_table(n: int, p: float) -> dict[int, float]:
    """E[X_k] for k = 0..n, the working table behind kappa and the bounds."""
    return {k: expected_exceed_count(n, p, k) for k in range(n + 1)}


def degree_profile(n: int, p: float) -> DegreeProfile:
    """Bundle kappa, regime, predicted range, and c for one (n, p)."""
    _check_np(n, p)
    if p == 0.0:
        raise ValueError("degree profile requires p > 0")
    return DegreeProfile(
        n=n,
        p=p,
        kappa=kappa(n, p),
        regime=classify_regime(n, p) if n >= 2 else "",
        predicted_delta_range=predicted_max_degree(n, p),
        c_coefficient=constant_p_coefficient(p),
    )
