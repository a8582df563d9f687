"""Prefix character sums, mollified second moments, Hoelder lower-bound
witnesses, the large-sieve checker, and the dyadic max^8 statistic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
import scipy.fft

from ._backend import kernels
from .char_core import PrimeContext, build_prime_context, is_prime
from .moments import moment_even
from .theta import ThetaTable, theta_all_characters


@dataclass(frozen=True)
class MollifierSpec:
    """Parameters of the mollified moment sums for one prime.

    x_cut = max(2, floor(p^epsilon)) is the mollifier length, t_cut =
    floor(p^tau) the Dirichlet-polynomial length; xi is the coefficient
    sequence (None means xi_n = 1).
    """

    p: int
    k: int
    epsilon: float
    tau: float = 0.5
    xi: Optional[Callable[[int], float]] = None

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if not 0 < self.tau < 1:
            raise ValueError("tau must lie in (0, 1)")
        # The archimedean-reduction regime needs x_cut^k < p; outside it
        # the orthogonality identities still hold, so larger epsilon is
        # allowed but the constraint is enforced whenever epsilon < 1/k.
        if self.epsilon < 1 / self.k and self.x_cut**self.k >= self.p:
            raise ValueError("x_cut^k must stay below p when epsilon < 1/k")

    @property
    def x_cut(self) -> int:
        return max(2, math.floor(self.p**self.epsilon))

    @property
    def t_cut(self) -> int:
        return math.floor(self.p**self.tau)

    def xi_values(self, t: int) -> np.ndarray:
        if self.xi is None:
            return np.ones(t)
        return np.array([float(self.xi(n)) for n in range(1, t + 1)])


@dataclass(frozen=True)
class MollifierSums:
    sigma1: float
    sigma2: float
    frak_s: float
    holder_lower_bound: float


def default_epsilon(p: int, k: int) -> float:
    """Desk-scale default keeping x_cut in a useful band under p^(eps*k) < p."""
    return min(0.3, 0.9 / k)


def epsilon_for_x_cut(p: int, x_cut: int) -> float:
    """Epsilon making floor(p^epsilon) equal the requested cutoff."""
    if not 2 <= x_cut < p:
        raise ValueError("x_cut must lie in [2, p)")
    return math.log(x_cut + 0.5) / math.log(p)


def prefix_sums_all_characters(ctx: PrimeContext, t: int, xi=None) -> np.ndarray:
    """S(chi_j; t) (or the xi-weighted version) for every j at once via DFT."""
    if not 1 <= t < ctx.p:
        raise ValueError("prefix length must satisfy 1 <= t < p")
    n = np.arange(1, t + 1, dtype=np.int64)
    weights = np.ones(t) if xi is None else np.asarray([float(xi(i)) for i in n])
    c = np.bincount(ctx.ind[n - 1], weights=weights, minlength=ctx.order)
    return ctx.order * scipy.fft.ifft(c)


def prefix_max(ctx: PrimeContext, Q: int) -> tuple[float, int, int]:
    """max over nonprincipal chi and t <= Q of |S(chi; t)|.

    Returns (value, j, t) with the smallest attaining character index,
    then the smallest t.
    """
    if not 1 <= Q < ctx.p:
        raise ValueError("Q must satisfy 1 <= Q < p")
    ind = np.ascontiguousarray(ctx.ind[np.arange(1, Q + 1) - 1])
    re = np.ascontiguousarray(ctx.roots.real)
    im = np.ascontiguousarray(ctx.roots.imag)
    return kernels.prefix_charsum_max(ind, ctx.order, re, im, Q)


def grh_shape_report(ctx: PrimeContext, Q: int) -> tuple[float, int, int]:
    """Diagnostic max over nonprincipal chi, t <= Q of |S(chi;t)|/sqrt(t)."""
    if not 1 <= Q < ctx.p:
        raise ValueError("Q must satisfy 1 <= Q < p")
    ind = np.ascontiguousarray(ctx.ind[np.arange(1, Q + 1) - 1])
    re = np.ascontiguousarray(ctx.roots.real)
    im = np.ascontiguousarray(ctx.roots.imag)
    return kernels.prefix_charsum_max_scaled(ind, ctx.order, re, im, Q)


def dirichlet_poly(ctx: PrimeContext, j: int, spec: MollifierSpec) -> complex:
    """Xi(chi_j; t_cut) = sum_{n<=t_cut} xi_n chi_j(n), by direct summation."""
    t = spec.t_cut
    if t >= ctx.p:
        raise ValueError("t_cut must be below p")
    n = np.arange(1, t + 1, dtype=np.int64)
    chi = ctx.roots[(j * ctx.ind[n - 1]) % ctx.order]
    return complex(np.sum(spec.xi_values(t) * chi))


def mollifier_sums(
    ctx: PrimeContext,
    spec: MollifierSpec,
    theta_table: ThetaTable | None = None,
) -> MollifierSums:
    """Sigma1, Sigma2 and the theta-weighted sum over even characters.

    Sigma2 runs over all even characters, Sigma1 and the theta sum over
    even nonprincipal ones; the Hoelder witness frak_s^k / Sigma2^(k-1)
    lower-bounds the 2k-th even moment.
    """
    if spec.p != ctx.p:
        raise ValueError("spec and context disagree on p")
    if spec.x_cut >= ctx.p:
        raise ValueError("x_cut must be below p")
    k = spec.k
    A = prefix_sums_all_characters(ctx, spec.x_cut)
    a_even = np.abs(A[0::2])
    sigma2 = math.fsum(np.sort(a_even)[::-1] ** (2 * k))

    xi_fn = spec.xi
    Xi = prefix_sums_all_characters(ctx, spec.t_cut, xi=xi_fn)
    mix = np.abs(Xi[2::2]) ** 2 * np.abs(A[2::2]) ** (2 * k - 2)
    sigma1 = math.fsum(np.sort(mix)[::-1])

    frak_s = 0.0
    holder = 0.0
    if theta_table is not None:
        if theta_table.request.eta != 0 or theta_table.request.x != 1.0:
            raise ValueError("theta table must be computed at eta=0, x=1")
        th = np.abs(theta_table.values[2::2])
        terms = th**2 * np.abs(A[2::2]) ** (2 * k - 2)
        frak_s = math.fsum(np.sort(terms)[::-1])
        if sigma2 > 0:
            holder = frak_s**k / sigma2 ** (k - 1)
    return MollifierSums(sigma1=sigma1, sigma2=sigma2, frak_s=frak_s,
                         holder_lower_bound=holder)


def large_sieve_check(a: np.ndarray, R: int) -> tuple[float, float, bool]:
    """Evaluate both sides of the large sieve inequality with constant 2.

    lhs = sum over r <= R and v coprime to r of |T(v/r)|^2 with
    T(u) = sum_h a_h e(hu); rhs = 2 (R^2 + H) sum |a_h|^2.
    """
    a = np.asarray(a, dtype=np.complex128)
    H = len(a)
    if H < 1 or R < 1:
        raise ValueError("need H >= 1 and R >= 1")
    h = np.arange(1, H + 1)
    lhs = 0.0
    for r in range(1, R + 1):
        for v in range(1, r + 1):
            if math.gcd(v, r) != 1:
                continue
            t = np.sum(a * np.exp(2j * np.pi * h * v / r))
            lhs += abs(t) ** 2
    A = float(np.sum(np.abs(a) ** 2))
    rhs = 2.0 * (R * R + H) * A
    return lhs, rhs, lhs <= rhs


def garaev_q(X: int) -> int:
    """Prefix-length cap Q(X) = ceil(2 sqrt(X log X)) used in the dyadic sweep."""
    return math.ceil(2.0 * math.sqrt(X * math.log(X)))


def primes_in(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(3, lo), hi + 1) if is_prime(n)]


def garaev_window(X: int) -> dict:
    """Per-window statistics over primes p in [X, 2X]:
    sum of max^8 prefix character sums (t <= Q(X)) and of max^8 theta
    values for both eta, over nonprincipal characters.
    """
    if X < 16:
        raise ValueError("X must be >= 16")
    Q = garaev_q(X)
    sums = {"charsum": [], "theta0": [], "theta1": []}
    ps = primes_in(X, 2 * X)
    for p in ps:
        ctx = build_prime_context(p)
        m, _, _ = prefix_max(ctx, min(Q, p - 1))
        sums["charsum"].append(m**8)
        for eta, key in ((0, "theta0"), (1, "theta1")):
            table = theta_all_characters(ctx, eta)
            sums[key].append(float(np.max(np.abs(table.values[1:]))) ** 8)
    return {
        "X": X,
        "Q": Q,
        "n_primes": len(ps),
        "sum_max8_charsum": math.fsum(sums["charsum"]),
        "sum_max8_theta_eta0": math.fsum(sums["theta0"]),
        "sum_max8_theta_eta1": math.fsum(sums["theta1"]),
    }


def garaev_statistic(X: int, eta: int) -> tuple[float, float]:
    """(sum of max^8 prefix character sums, sum of max^8 theta at this eta)."""
    w = garaev_window(X)
    return w["sum_max8_charsum"], w[f"sum_max8_theta_eta{eta}"]
