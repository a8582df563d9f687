"""Truncated theta sums: single-character reference summation and bulk
evaluation over all characters at once.

The bulk path buckets the real coefficients n^eta * exp(-pi n^2 x / p)
by discrete log and applies one length-(p-1) DFT; scipy's pocketfft
handles arbitrary (in particular prime) lengths at O(n log n) via a
Bluestein/chirp-z reduction, so a single code path covers every p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.fft
from scipy.special import erfc

from ._backend import kernels
from .char_core import PrimeContext


@dataclass(frozen=True)
class ThetaRequest:
    p: int
    eta: int
    x: float = 1.0
    tail_eps: float = 1e-15

    def __post_init__(self):
        if self.eta not in (0, 1):
            raise ValueError("eta must be 0 or 1")
        if not self.x > 0:
            raise ValueError("x must be positive")
        if not 0 < self.tail_eps < 1:
            raise ValueError("tail_eps must lie in (0, 1)")


@dataclass(frozen=True)
class ThetaTable:
    """values[j] = sum_{n<=N} chi_j(n) n^eta exp(-pi n^2 x / p)."""

    request: ThetaRequest
    N: int
    values: np.ndarray = field(repr=False)
    tail_bound: float = 0.0

    def magnitudes(self, parity: int | None = None, include_principal: bool = True) -> np.ndarray:
        """|values[j]| restricted to a parity class (0 even, 1 odd)."""
        mags = np.abs(self.values)
        if parity is None:
            return mags if include_principal else mags[1:]
        start = parity if (parity == 1 or include_principal) else 2
        return mags[start::2]


def _tail_integral(N: float, eta: int, a: float) -> float:
    """Integral from N to infinity of (t^eta + 1) exp(-a t^2) dt."""
    gauss = 0.5 * math.sqrt(math.pi / a) * float(erfc(N * math.sqrt(a)))
    if eta == 0:
        return 2.0 * gauss
    return math.exp(-a * N * N) / (2.0 * a) + gauss


def truncation_length(p: int, eta: int, x: float, tail_eps: float) -> int:
    """Smallest N whose analytic tail majorant falls below tail_eps.

    Also floored so the integrand is decreasing beyond N, which is what
    makes the integral an upper bound for the discrete tail.
    """
    if tail_eps <= 0:
        raise ValueError("tail_eps must be positive")
    a = math.pi * x / p
    lo = max(1, math.ceil(math.sqrt(eta / (2.0 * a))) if eta else 1)
    N = lo
    while _tail_integral(N, eta, a) >= tail_eps:
        N *= 2
    # binary search in (N//2, N]
    hi = N
    lo = max(lo, N // 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if _tail_integral(mid, eta, a) < tail_eps:
            hi = mid
        else:
            lo = mid + 1
    return hi


def theta_naive(ctx: PrimeContext, j: int, eta: int, x: float, N: int) -> complex:
    """Reference summation of the defining series to N terms.

    Uses exact-rounding accumulation (math.fsum) on the real and
    imaginary parts independently; this is the oracle the bulk DFT path
    is checked against.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    p, m = ctx.p, ctx.order
    re_terms = []
    im_terms = []
    for n in range(1, N + 1):
        r = n % p
        if r == 0:
            continue
        chi = ctx.roots[(j * int(ctx.ind[r - 1])) % m]
        c = math.exp(-math.pi * n * n * x / p)
        if eta:
            c *= n
        re_terms.append(c * chi.real)
        im_terms.append(c * chi.imag)
    return complex(math.fsum(re_terms), math.fsum(im_terms))


def theta_all_characters(
    ctx: PrimeContext, eta: int, x: float = 1.0, tail_eps: float = 1e-15
) -> ThetaTable:
    """ThetaTable for every character mod p at once.

    Bucket the real coefficients by discrete log, then one inverse-sign
    DFT of length p-1 produces values[j] = sum_a w[a] e(j a/(p-1)).
    """
    req = ThetaRequest(p=ctx.p, eta=eta, x=x, tail_eps=tail_eps)
    N = truncation_length(ctx.p, eta, x, tail_eps)
    n = np.arange(1, N + 1, dtype=np.int64)
    r = n % ctx.p
    unit = r != 0
    n = n[unit]
    r = r[unit]
    coeff = np.exp(-math.pi * x * (n.astype(np.float64) ** 2) / ctx.p)
    if eta:
        coeff *= n
    idx = np.ascontiguousarray((ctx.ind[r - 1]) % ctx.order)
    w = kernels.bucket_weights(idx, np.ascontiguousarray(coeff), ctx.order)
    values = ctx.order * scipy.fft.ifft(w)
    tail = _tail_integral(N, eta, math.pi * x / ctx.p)
    return ThetaTable(request=req, N=N, values=values, tail_bound=tail)
