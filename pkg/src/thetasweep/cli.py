"""Command-line driver.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 I/O
error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .char_core import build_prime_context
from .fitting import fit_power_log
from .moments import moment_even, moment_odd
from .sweep import HEADERS, SweepConfig, run_sweep
from .theta import theta_all_characters, theta_naive, truncation_length
from .divisors import DivisorSpec, restricted_divisor_count
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


def read_config_file(path: str) -> dict:
    """Plain key=value lines; '#' starts a comment."""
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.rstrip()}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def cmd_ctx(args) -> int:
    ctx = build_prime_context(args.p)
    print(f"p={ctx.p} g={ctx.g} order={ctx.order}")
    head = ", ".join(str(int(v)) for v in ctx.ind[: min(10, ctx.order)])
    print(f"ind[1..{min(10, ctx.order)}] = {head}")
    return EXIT_OK


def cmd_theta(args) -> int:
    ctx = build_prime_context(args.p)
    if args.all:
        table = theta_all_characters(ctx, args.eta, args.x, args.tail_eps)
        print(f"# p={args.p} eta={args.eta} x={args.x} N={table.N} "
              f"tail_bound={table.tail_bound!r}")
        for j, v in enumerate(table.values):
            print(f"{j},{v.real!r},{v.imag!r}")
    else:
        N = truncation_length(args.p, args.eta, args.x, args.tail_eps)
        v = theta_naive(ctx, args.char, args.eta, args.x, N)
        print(f"p={args.p} j={args.char} eta={args.eta} x={args.x} N={N}")
        print(f"theta = {v.real!r} + {v.imag!r}i  |theta| = {abs(v)!r}")
    return EXIT_OK


def cmd_moments(args) -> int:
    ctx = build_prime_context(args.p)
    t0 = theta_all_characters(ctx, 0)
    t1 = theta_all_characters(ctx, 1)
    lines = []
    for k in args.k:
        for rec, eta, table in (
            (moment_even(t0, k, include_principal=False), 0, t0),
            (moment_even(t0, k, include_principal=True), 0, t0),
            (moment_odd(t1, k), 1, t1),
        ):
            lines.append(f"{rec.p},{rec.k},{rec.cls},{rec.value!r},"
                         f"{rec.normalizer!r},{rec.ratio!r},{eta},{table.N},"
                         f"{__version__}")
    if args.csv:
        try:
            with open(args.csv, "w", newline="") as fh:
                fh.write(HEADERS["moments"] + "\n")
                fh.write("\n".join(lines) + "\n")
        except OSError as exc:
            print(f"I/O error: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        print(HEADERS["moments"])
        print("\n".join(lines))
    return EXIT_OK


def cmd_sweep(args) -> int:
    overrides = {}
    if args.config:
        overrides = read_config_file(args.config)

    def pick(name, cast, cli_value, default):
        if cli_value is not None:
            return cli_value
        if name in overrides:
            return cast(overrides[name])
        return default

    kind = pick("kind", str, args.kind, None)
    out_dir = pick("out", str, args.out, None)
    if kind is None or out_dir is None:
        print("sweep requires --kind and --out (or config file entries)",
              file=sys.stderr)
        return EXIT_USAGE
    config = SweepConfig(
        kind=kind,
        x_min=pick("min", int, args.min, 3),
        x_max=pick("max", int, args.max, 1000),
        sampling=pick("sampling", str, args.sampling, "all"),
        per_octave=pick("per_octave", int, args.per_octave, 24),
        k_list=pick("k", _parse_ints, _parse_ints(args.k) if args.k else None, (1, 2)),
        epsilon=pick("epsilon", float, args.epsilon, None),
        tau=pick("tau", float, args.tau, 0.5),
        xi=pick("xi", str, args.xi, "one"),
        jobs=pick("jobs", int, args.jobs, 1),
        out_dir=out_dir,
        seed=pick("seed", int, args.seed, 0),
    )
    try:
        path = run_sweep(config)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {path}")
    return EXIT_OK


def cmd_divisor_count(args) -> int:
    gamma = tuple(float(g) for g in args.gamma.split(","))
    spec = DivisorSpec(k=args.k, T=args.T, gamma=gamma)
    count = restricted_divisor_count(spec)
    print(f"k={args.k} T={args.T} gamma={args.gamma} count={count}")
    return EXIT_OK


def cmd_fit(args) -> int:
    import csv as csvmod

    try:
        with open(args.input, newline="") as fh:
            rows = list(csvmod.DictReader(fh))
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    if not rows:
        print("empty input", file=sys.stderr)
        return EXIT_USAGE
    cols = rows[0].keys()
    fix = args.fix_a
    if {"p", "value", "k", "class"} <= set(cols):
        groups = {}
        for r in rows:
            groups.setdefault((int(r["k"]), r["class"]), []).append(
                (float(r["p"]), float(r["value"]))
            )
        for (k, cls), pts in sorted(groups.items()):
            xs, ys = zip(*pts)
            fr = fit_power_log(xs, ys, fix_power=fix)
            print(f"k={k} class={cls}: C={fr.constant!r} alpha={fr.power!r} "
                  f"beta={fr.log_power!r} rms={fr.rms_residual!r} n={fr.n_points}")
    elif {"T", "count", "k"} <= set(cols):
        groups = {}
        for r in rows:
            groups.setdefault(int(r["k"]), []).append((float(r["T"]), float(r["count"])))
        for k, pts in sorted(groups.items()):
            xs, ys = zip(*pts)
            fr = fit_power_log(xs, ys, fix_power=fix)
            print(f"k={k}: C={fr.constant!r} alpha={fr.power!r} beta={fr.log_power!r} "
                  f"rms={fr.rms_residual!r} n={fr.n_points}")
    elif "X" in cols:
        stats = [c for c in cols if c.startswith("sum_")]
        xs = [float(r["X"]) for r in rows]
        for col in stats:
            ys = [float(r[col]) for r in rows]
            fr = fit_power_log(xs, ys, fix_power=fix, fix_log_power=0.0)
            print(f"{col}: C={fr.constant!r} alpha={fr.power!r} "
                  f"rms={fr.rms_residual!r} n={fr.n_points}")
    else:
        print("unrecognized CSV schema", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_verify(args) -> int:
    ok, checks = run_suite(args.suite)
    for name, err, tol, passed in checks:
        status = "PASS" if passed else "FAIL"
        print(f"{status} {name}: err={err:.3e} tol={tol:.1e}")
    print(f"suite {args.suite}: {'PASS' if ok else 'FAIL'} "
          f"({sum(c[3] for c in checks)}/{len(checks)})")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="thetasweep",
        description="Theta-function moments and character-sum statistics over primes.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ctx", help="print prime context summary")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_ctx)

    p = sub.add_parser("theta", help="print theta value(s)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--eta", type=int, choices=(0, 1), required=True)
    p.add_argument("--x", type=float, default=1.0)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--all", action="store_true")
    p.add_argument("--tail-eps", type=float, default=1e-15, dest="tail_eps")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("moments", help="moment records for one prime")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=_parse_ints, required=True)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("sweep", help="run a sweep")
    p.add_argument("--kind", choices=("moments", "garaev", "nonvanishing",
                                      "mollifier", "divisor"))
    p.add_argument("--min", type=int)
    p.add_argument("--max", type=int)
    p.add_argument("--sampling", choices=("all", "geometric"))
    p.add_argument("--per-octave", type=int, dest="per_octave")
    p.add_argument("--k", default=None)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--tau", type=float)
    p.add_argument("--xi", choices=("one", "one-plus-inv"))
    p.add_argument("--jobs", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", default=None)
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("divisor-count", help="restricted divisor correlation count")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--gamma", required=True)
    p.set_defaults(func=cmd_divisor_count)

    p = sub.add_parser("fit", help="fit C*p^a*logp^b to CSV data")
    p.add_argument("--input", required=True)
    p.add_argument("--model", default="C*p^a*logp^b")
    p.add_argument("--fix-a", type=float, default=None, dest="fix_a")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
