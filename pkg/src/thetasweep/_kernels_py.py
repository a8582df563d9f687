"""Pure numpy implementations of the hot kernels.

These match the compiled extension operation-for-operation: sums run in
the same order (ascending n), so results agree bit-for-bit in practice
and the argmax tie-breaking (smallest character index, then smallest
prefix length) is identical by construction.
"""

from __future__ import annotations

import math

import numpy as np


def bucket_weights(idx, coeff, m):
    """Scatter-add coeff into m buckets: w[a] = sum of coeff where idx == a."""
    return np.bincount(idx, weights=coeff, minlength=m).astype(np.float64)


def prefix_charsum_max(ind, m, roots_re, roots_im, q):
    """Max over nonprincipal characters j and prefix lengths t <= q of
    |sum_{n<=t} chi_j(n)|, with the smallest attaining (j, t).

    ind holds the discrete logs of n = 1..q (all units, q < p).
    Returns (max_abs, j, t).
    """
    j = np.arange(1, m, dtype=np.int64)
    sre = np.zeros(m - 1)
    sim = np.zeros(m - 1)
    best = np.full(m - 1, -1.0)
    best_t = np.zeros(m - 1, dtype=np.int64)
    for n in range(q):
        a = (ind[n] * j) % m
        sre += roots_re[a]
        sim += roots_im[a]
        s = sre * sre + sim * sim
        hit = s > best
        best[hit] = s[hit]
        best_t[hit] = n + 1
    bj = int(np.argmax(best))
    return math.sqrt(best[bj]), bj + 1, int(best_t[bj])


def prefix_charsum_max_scaled(ind, m, roots_re, roots_im, q):
    """Like prefix_charsum_max but maximizing |S(chi; t)| / sqrt(t)."""
    j = np.arange(1, m, dtype=np.int64)
    sre = np.zeros(m - 1)
    sim = np.zeros(m - 1)
    best = np.full(m - 1, -1.0)
    best_t = np.zeros(m - 1, dtype=np.int64)
    for n in range(q):
        a = (ind[n] * j) % m
        sre += roots_re[a]
        sim += roots_im[a]
        s = (sre * sre + sim * sim) / (n + 1)
        hit = s > best
        best[hit] = s[hit]
        best_t[hit] = n + 1
    bj = int(np.argmax(best))
    return math.sqrt(best[bj]), bj + 1, int(best_t[bj])
