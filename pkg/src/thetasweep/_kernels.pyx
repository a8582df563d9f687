# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels; see _kernels_py for the reference semantics."""

from libc.math cimport sqrt

import numpy as np


def bucket_weights(const long long[::1] idx, const double[::1] coeff, Py_ssize_t m):
    """Kahan-compensated scatter-add of coeff into m buckets."""
    out = np.zeros(m, dtype=np.float64)
    comp = np.zeros(m, dtype=np.float64)
    cdef double[::1] w = out
    cdef double[::1] c = comp
    cdef Py_ssize_t i, a
    cdef double y, t
    for i in range(idx.shape[0]):
        a = idx[i]
        y = coeff[i] - c[a]
        t = w[a] + y
        c[a] = (t - w[a]) - y
        w[a] = t
    return out


def prefix_charsum_max(const long long[::1] ind, Py_ssize_t m,
                       const double[::1] roots_re, const double[::1] roots_im,
                       Py_ssize_t q):
    cdef Py_ssize_t j, n, a, bj = 1, bt = 1, btj
    cdef double re, im, s, bestj
    cdef double best = -1.0
    for j in range(1, m):
        re = 0.0
        im = 0.0
        bestj = -1.0
        btj = 1
        for n in range(q):
            a = (j * ind[n]) % m
            re += roots_re[a]
            im += roots_im[a]
            s = re * re + im * im
            if s > bestj:
                bestj = s
                btj = n + 1
        if bestj > best:
            best = bestj
            bj = j
            bt = btj
    return sqrt(best), bj, bt


def prefix_charsum_max_scaled(const long long[::1] ind, Py_ssize_t m,
                              const double[::1] roots_re, const double[::1] roots_im,
                              Py_ssize_t q):
    cdef Py_ssize_t j, n, a, bj = 1, bt = 1, btj
    cdef double re, im, s, bestj
    cdef double best = -1.0
    for j in range(1, m):
        re = 0.0
        im = 0.0
        bestj = -1.0
        btj = 1
        for n in range(q):
            a = (j * ind[n]) % m
            re += roots_re[a]
            im += roots_im[a]
            s = (re * re + im * im) / (n + 1)
            if s > bestj:
                bestj = s
                btj = n + 1
        if bestj > best:
            best = bestj
            bj = j
            bt = btj
    return sqrt(best), bj, bt
