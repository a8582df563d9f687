"""Exact counting oracles: restricted divisor correlations inside a box
and the modular congruence counts behind the orthogonality expansions.

These are oracles for identity tests and for log-power growth fits, so
every count is exact (python integers, no floating point).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .fitting import FitResult, fit_power_log

ENUMERATION_BUDGET = 10**8  # pairs of factor tuples
HISTOGRAM_BUDGET = 1.5 * 10**8  # product-array entries (~2 GiB of int64)


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DivisorSpec:
    """Box T^gamma_1 x ... x T^gamma_k for the equal-products count."""

    k: int
    T: float
    gamma: tuple[float, ...]

    def __post_init__(self):
        if self.k < 1 or len(self.gamma) != self.k:
            raise ValueError("gamma must have k >= 1 entries")
        if any(not 0 < g <= 1 for g in self.gamma):
            raise ValueError("gamma entries must lie in (0, 1]")
        if self.T < 1:
            raise ValueError("T must be >= 1")

    @property
    def limits(self) -> tuple[int, ...]:
        return tuple(max(1, math.floor(self.T**g)) for g in self.gamma)


def _product_histogram(limits) -> tuple[np.ndarray, np.ndarray]:
    """Multiplicities of products a_1*...*a_k over the box, a_i <= L_i."""
    arr = np.arange(1, limits[0] + 1, dtype=np.int64)
    size = limits[0]
    for L in limits[1:]:
        size *= L
        if size > HISTOGRAM_BUDGET:
            raise BudgetExceeded(f"histogram of {size} products exceeds budget")
        arr = np.multiply.outer(arr, np.arange(1, L + 1, dtype=np.int64)).ravel()
    return np.unique(arr, return_counts=True)


def restricted_divisor_count(spec: DivisorSpec, strategy: str = "auto") -> int:
    """Number of 2k-tuples a_i, b_i <= floor(T^gamma_i) with equal products.

    "enumeration" compares all tuple pairs directly; "histogram" counts
    via sum of squared product multiplicities.  Both are exact.
    """
    limits = spec.limits
    n_tuples = math.prod(limits)
    if strategy == "auto":
        strategy = "enumeration" if n_tuples * n_tuples <= 10**6 else "histogram"
    if strategy == "enumeration":
        if n_tuples * n_tuples > ENUMERATION_BUDGET:
            raise BudgetExceeded("enumeration budget exceeded")
        boxes = [range(1, L + 1) for L in limits]
        products = [math.prod(t) for t in itertools.product(*boxes)]
        return sum(1 for a in products for b in products if a == b)
    if strategy == "histogram":
        _, counts = _product_histogram(limits)
        mult, times = np.unique(counts, return_counts=True)
        return sum(int(m) ** 2 * int(t) for m, t in zip(mult, times))
    raise ValueError(f"unknown strategy {strategy!r}")


def _unit_product_histogram(p: int, n_factors: int, limit: int) -> np.ndarray:
    """Integer histogram mod p of products of n_factors values in [1, limit]."""
    w = np.zeros(p, dtype=np.int64)
    w[1] = 1
    res = np.arange(p, dtype=np.int64)
    for _ in range(n_factors):
        nxt = np.zeros(p, dtype=np.int64)
        for v in range(1, limit + 1):
            nxt[(res * v) % p] += w
        w = nxt
    return w


def congruence_count(p, k, x_cut, t_cut=None, xi=None):
    """Count of tuples whose products agree up to sign modulo p.

    Without t_cut: tuples a_i, b_i <= x_cut (k factors each side) with
    a_1...a_k = +-b_1...b_k (mod p); exact integer.  With t_cut: the
    weighted count sum xi_a xi_b over a, b <= t_cut and k-1 short
    factors per side, with a*a_1*...*a_{k-1} = +-b*b_1*...*b_{k-1}.
    """
    if x_cut >= p or (t_cut is not None and t_cut >= p):
        raise ValueError("cutoffs must stay below p")
    if p <= 2:
        raise ValueError("p must be an odd prime")
    budget = p * max(x_cut, t_cut or 0) * k
    if budget > HISTOGRAM_BUDGET:
        raise BudgetExceeded("congruence histogram budget exceeded")
    if t_cut is None:
        w = _unit_product_histogram(p, k, x_cut)
        mirrored = w[(-np.arange(p)) % p]
        return int(np.dot(w[1:], w[1:] + mirrored[1:]))
    base = _unit_product_histogram(p, k - 1, x_cut).astype(np.float64)
    weights = np.ones(t_cut) if xi is None else np.array(
        [float(xi(n)) for n in range(1, t_cut + 1)]
    )
    side = np.zeros(p)
    res = np.arange(p, dtype=np.int64)
    for a in range(1, t_cut + 1):
        side[(res * a) % p] += weights[a - 1] * base
    mirrored = side[(-np.arange(p)) % p]
    total = float(np.dot(side[1:], side[1:] + mirrored[1:]))
    if xi is None:
        return int(round(total))
    return total


def log_power_fit(samples, gamma: float | None = None) -> FitResult:
    """Fit count = C * T^gamma * (log T)^beta; gamma fixed when given.

    Needs at least 4 points spanning two octaves of T.
    """
    samples = sorted(samples)
    Ts = [s[0] for s in samples]
    cs = [float(s[1]) for s in samples]
    if len(set(Ts)) < 4 or max(Ts) < 4 * min(Ts):
        raise ValueError("need >= 4 points spanning at least two octaves")
    return fit_power_log(Ts, cs, fix_power=gamma, min_points=4)
