"""Benchmark the compiled kernels against the numpy fallback.

Runs both implementations on identical inputs and prints a table of
timings plus the maximum cross-backend deviation, e.g.::

    python3 benchmarks/bench_kernels.py --p 20011 --q 400 --repeat 5
"""

import argparse
import time

import numpy as np

from thetasweep import _kernels_py
from thetasweep.char_core import build_prime_context

try:
    from thetasweep import _kernels

    HAVE_COMPILED = True
except ImportError:
    _kernels = None
    HAVE_COMPILED = False


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def bench_bucket_weights(ctx, repeat):
    n = np.arange(1, 40 * ctx.p, dtype=np.int64)
    n = n[n % ctx.p != 0]
    idx = np.ascontiguousarray(ctx.ind[(n % ctx.p) - 1])
    coeff = np.ascontiguousarray(np.exp(-np.pi * (n / (40.0 * ctx.p)) ** 2))
    rows = []
    t_py, ref = best_of(lambda: _kernels_py.bucket_weights(idx, coeff, ctx.order), repeat)
    rows.append(("python", t_py, 0.0))
    if HAVE_COMPILED:
        t_c, got = best_of(lambda: _kernels.bucket_weights(idx, coeff, ctx.order), repeat)
        rows.append(("cython", t_c, float(np.max(np.abs(got - ref)))))
    return rows


def bench_prefix_max(ctx, Q, repeat):
    ind = np.ascontiguousarray(ctx.ind[np.arange(Q)])
    re = np.ascontiguousarray(ctx.roots.real)
    im = np.ascontiguousarray(ctx.roots.imag)
    rows = []
    t_py, ref = best_of(
        lambda: _kernels_py.prefix_charsum_max(ind, ctx.order, re, im, Q), repeat
    )
    rows.append(("python", t_py, 0.0))
    if HAVE_COMPILED:
        t_c, got = best_of(
            lambda: _kernels.prefix_charsum_max(ind, ctx.order, re, im, Q), repeat
        )
        rows.append(("cython", t_c, abs(got[0] - ref[0])))
    return rows


def print_table(title, rows):
    print(f"\n{title}")
    base = rows[0][1]
    for name, t, dev in rows:
        speedup = base / t if t else float("inf")
        print(f"  {name:8s} {t * 1e3:10.2f} ms   x{speedup:6.2f}   max dev {dev:.2e}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=20011)
    ap.add_argument("--q", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"compiled kernels available: {HAVE_COMPILED}")
    ctx = build_prime_context(args.p)
    print_table(
        f"bucket_weights (p={args.p}, ~{40 * args.p} terms)",
        bench_bucket_weights(ctx, args.repeat),
    )
    print_table(
        f"prefix_charsum_max (p={args.p}, Q={args.q})",
        bench_prefix_max(ctx, args.q, args.repeat),
    )


if __name__ == "__main__":
    main()
