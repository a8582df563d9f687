"""Multiplicative character group modulo a prime.

Characters are indexed by j in [0, p-2] against the smallest primitive
root g: chi_j(g^a) = e(j*a/(p-1)).  A discrete-log table built once per
prime makes every downstream evaluation a table lookup.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi


def unit_exp(z: float) -> complex:
    """e(z) = exp(2*pi*i*z)."""
    return cmath.exp(2j * math.pi * z)


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def smallest_primitive_root(p: int) -> int:
    order = p - 1
    factors = _prime_factors(order)
    for g in range(2, p):
        if all(pow(g, order // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError(f"no primitive root found modulo {p}")


@dataclass(frozen=True)
class PrimeContext:
    """Immutable per-prime character machinery.

    ind[n-1] is the discrete log of n base g, so ind[0] == 0.
    roots[a] = e(a/(p-1)) caches the (p-1)-th roots of unity;
    character values are roots[(j*ind) % (p-1)].
    """

    p: int
    g: int
    order: int
    ind: np.ndarray = field(repr=False)
    roots: np.ndarray = field(repr=False)

    def dlog(self, n: int) -> int:
        r = n % self.p
        if r == 0:
            raise ValueError(f"{n} is not a unit modulo {self.p}")
        return int(self.ind[r - 1])

    def character_values(self, j: int, n: np.ndarray) -> np.ndarray:
        """Vector of chi_j(n); zero where p | n."""
        n = np.asarray(n)
        r = n % self.p
        out = np.zeros(n.shape, dtype=np.complex128)
        unit = r != 0
        out[unit] = self.roots[(j * self.ind[r[unit] - 1]) % self.order]
        return out


def build_prime_context(p: int) -> PrimeContext:
    if p < 3 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime >= 3, got {p}")
    g = smallest_primitive_root(p)
    order = p - 1
    ind = np.empty(order, dtype=np.int64)
    val = 1
    for a in range(order):
        ind[val - 1] = a
        val = (val * g) % p
    roots = np.exp(2j * np.pi * np.arange(order) / order)
    return PrimeContext(p=p, g=g, order=order, ind=ind, roots=roots)


def character_value(ctx: PrimeContext, j: int, n: int) -> complex:
    """chi_j(n); completely multiplicative, period p, 0 on multiples of p."""
    r = n % ctx.p
    if r == 0:
        return 0j
    return complex(ctx.roots[(j * int(ctx.ind[r - 1])) % ctx.order])


def character_parity(j: int) -> int:
    """1 for odd characters (chi(-1) = -1), 0 for even."""
    return j & 1


def even_character_correlation(ctx: PrimeContext, a: int, b: int) -> complex:
    """Sum of chi(a)*conj(chi(b)) over the even characters.

    Equals (p-1)/2 when a = +-b (mod p) and 0 otherwise; returned as the
    actually accumulated complex sum so tests can watch the imaginary part.
    """
    if a % ctx.p == 0 or b % ctx.p == 0:
        raise ValueError("arguments must be units modulo p")
    d = (ctx.dlog(a) - ctx.dlog(b)) % ctx.order
    js = np.arange(0, ctx.order, 2, dtype=np.int64)
    return complex(np.sum(ctx.roots[(js * d) % ctx.order]))


def gauss_sum(ctx: PrimeContext, j: int) -> complex:
    """tau_p(chi_j) = sum_v chi_j(v) e(v/p) over v = 1..p-1.

    |tau| = sqrt(p) for nonprincipal j; the principal character gives -1.
    """
    v = np.arange(1, ctx.p, dtype=np.int64)
    chi = ctx.roots[(j * ctx.ind) % ctx.order]
    ep = np.exp(2j * np.pi * v / ctx.p)
    return complex(np.sum(chi * ep))


def twisted_gauss_sum(ctx: PrimeContext, j: int, b: int) -> complex:
    """sum_v conj(chi_j)(v) e(b*v/p) over units v; equals chi_j(b)*tau(conj chi_j)."""
    v = np.arange(1, ctx.p, dtype=np.int64)
    chi_bar = np.conj(ctx.roots[(j * ctx.ind) % ctx.order])
    ep = np.exp(2j * np.pi * (b % ctx.p) * v / ctx.p)
    return complex(np.sum(chi_bar * ep))


def window_exponential_sum(b: int, U: int, V: int, Q: int) -> complex:
    """sum_{n=U+1}^{U+V} e(b*n/Q) in closed form (geometric sum)."""
    if V < 1:
        return 0j
    if b % Q == 0:
        return complex(V)
    w = unit_exp(b / Q)
    num = unit_exp(b * (U + V + 1) / Q) - unit_exp(b * (U + 1) / Q)
    return num / (w - 1.0)
