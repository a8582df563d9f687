"""Prime sweeps: scheduling, CSV persistence, checkpoint/resume.

Work units (primes, dyadic X values, or (k, T) boxes) are dispatched in
ascending order and their rows written in ascending order regardless of
worker count, so output bytes depend only on the configuration.
"""

from __future__ import annotations

import hashlib
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .char_core import build_prime_context, is_prime
from .charsum import MollifierSpec, default_epsilon, garaev_window, mollifier_sums
from .divisors import DivisorSpec, restricted_divisor_count
from .moments import moment_even, moment_odd, nonvanishing_scan
from .theta import theta_all_characters

KINDS = ("moments", "garaev", "nonvanishing", "mollifier", "divisor")

HEADERS = {
    "moments": "p,k,class,value,normalizer,ratio,eta,N_trunc,tool_version",
    "garaev": "X,Q,n_primes,sum_max8_charsum,sum_max8_theta_eta0,"
              "sum_max8_theta_eta1,tool_version",
    "nonvanishing": "p,parity,min_abs_theta,argmin_j,normalized_min,tool_version",
    "mollifier": "p,k,epsilon,x_cut,tau,t_cut,sigma1,sigma2,frak_s,holder_lb,"
                 "T2k_plus,tool_version",
    "divisor": "k,T,gamma,count,tool_version",
}


@dataclass(frozen=True)
class SweepConfig:
    kind: str
    x_min: int
    x_max: int
    sampling: str = "all"  # "all" or "geometric"
    per_octave: int = 24
    k_list: tuple[int, ...] = (1, 2)
    epsilon: float | None = None
    tau: float = 0.5
    xi: str = "one"  # "one" or "one-plus-inv"
    jobs: int = 1
    out_dir: str = "."
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sweep kind {self.kind!r}")
        if self.x_min < 3 or self.x_max < self.x_min:
            raise ValueError("need 3 <= x_min <= x_max")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def content_key(self) -> dict:
        """Fields that determine output content (jobs/out_dir do not)."""
        d = asdict(self)
        d.pop("jobs")
        d.pop("out_dir")
        d["k_list"] = list(self.k_list)
        d["tool_version"] = __version__
        return d


def xi_callable(name: str):
    if name == "one":
        return None
    if name == "one-plus-inv":
        return lambda n: 1.0 + 1.0 / n
    raise ValueError(f"unknown xi sequence {name!r}")


def nearest_prime(n: int) -> int:
    for d in range(n + 2):
        if n - d >= 3 and is_prime(n - d):
            return n - d
        if is_prime(n + d):
            return n + d
    raise ValueError("no prime found")


def sample_primes(x_min: int, x_max: int, sampling: str, per_octave: int) -> list[int]:
    if sampling == "all" or x_max <= 10**4:
        return [p for p in range(max(3, x_min), x_max + 1) if is_prime(p)]
    n_steps = max(2, math.ceil(math.log2(x_max / x_min) * per_octave))
    grid = np.geomspace(x_min, x_max, n_steps)
    return sorted({nearest_prime(int(round(g))) for g in grid})


def work_units(config: SweepConfig) -> list[str]:
    if config.kind == "garaev":
        xs = []
        X = config.x_min
        while X <= config.x_max:
            xs.append(str(X))
            X *= 2
        return xs
    if config.kind == "divisor":
        units = []
        T = config.x_min
        while T <= config.x_max:
            units.extend(f"{k}:{T}" for k in config.k_list)
            T *= 2
        return units
    ps = sample_primes(config.x_min, config.x_max, config.sampling, config.per_octave)
    return [str(p) for p in ps]


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def compute_unit(config: SweepConfig, unit: str) -> list[str]:
    """All CSV rows for one work unit, already formatted."""
    kind = config.kind
    rows = []
    if kind == "moments":
        p = int(unit)
        ctx = build_prime_context(p)
        tables = {0: theta_all_characters(ctx, 0), 1: theta_all_characters(ctx, 1)}
        for k in config.k_list:
            recs = [
                (moment_even(tables[0], k, include_principal=False), 0),
                (moment_even(tables[0], k, include_principal=True), 0),
                (moment_odd(tables[1], k), 1),
            ]
            for rec, eta in recs:
                rows.append(",".join(map(_fmt, [
                    rec.p, rec.k, rec.cls, rec.value, rec.normalizer,
                    rec.ratio, eta, tables[eta].N, __version__,
                ])))
    elif kind == "garaev":
        w = garaev_window(int(unit))
        rows.append(",".join(map(_fmt, [
            w["X"], w["Q"], w["n_primes"], w["sum_max8_charsum"],
            w["sum_max8_theta_eta0"], w["sum_max8_theta_eta1"], __version__,
        ])))
    elif kind == "nonvanishing":
        p = int(unit)
        ctx = build_prime_context(p)
        for parity, name in ((0, "even"), (1, "odd")):
            if parity == 0 and p == 3:
                continue  # no nonprincipal even character mod 3
            table = theta_all_characters(ctx, parity)
            mn, j = nonvanishing_scan(table, parity)
            rows.append(",".join(map(_fmt, [
                p, name, mn, j, mn / p ** (parity / 2), __version__,
            ])))
    elif kind == "mollifier":
        p = int(unit)
        ctx = build_prime_context(p)
        table = theta_all_characters(ctx, 0)
        xi = xi_callable(config.xi)
        for k in config.k_list:
            if k < 2:
                continue
            eps = config.epsilon if config.epsilon is not None else default_epsilon(p, k)
            spec = MollifierSpec(p=p, k=k, epsilon=eps, tau=config.tau, xi=xi)
            ms = mollifier_sums(ctx, spec, theta_table=table)
            t2k = moment_even(table, k, include_principal=False).value
            rows.append(",".join(map(_fmt, [
                p, k, eps, spec.x_cut, config.tau, spec.t_cut, ms.sigma1,
                ms.sigma2, ms.frak_s, ms.holder_lower_bound, t2k, __version__,
            ])))
    elif kind == "divisor":
        k_s, t_s = unit.split(":")
        k, T = int(k_s), int(t_s)
        spec = DivisorSpec(k=k, T=float(T), gamma=(1.0,) * k)
        count = restricted_divisor_count(spec)
        gamma = ";".join(repr(g) for g in spec.gamma)
        rows.append(",".join(map(_fmt, [k, T, gamma, count, __version__])))
    else:
        raise ValueError(kind)
    return rows


def _worker(args):
    config_dict, unit = args
    config = SweepConfig(**config_dict)
    return unit, compute_unit(config, unit)


def _unit_of_row(kind: str, row: str) -> str:
    fields = row.split(",")
    if kind == "divisor":
        return f"{fields[0]}:{fields[1]}"
    return fields[0]


def run_sweep(config: SweepConfig) -> Path:
    """Run (or resume) a sweep; returns the output CSV path."""
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{config.kind}.csv"
    manifest_path = out_dir / "manifest.json"

    units = work_units(config)
    cached: dict[str, list[str]] = {}
    if manifest_path.exists() and csv_path.exists():
        manifest = json.loads(manifest_path.read_text())
        if manifest.get("config") == config.content_key():
            done = set(manifest.get("completed", []))
            body = csv_path.read_text().splitlines()[1:]
            for row in body:
                u = _unit_of_row(config.kind, row)
                if u in done:
                    cached.setdefault(u, []).append(row)

    todo = [u for u in units if u not in cached]

    def write_manifest(completed: list[str]) -> None:
        digest = hashlib.sha256(csv_path.read_bytes()).hexdigest()
        manifest = {
            "config": config.content_key(),
            "completed": completed,
            "digests": {csv_path.name: digest},
            "tool_version": __version__,
            "updated": time.strftime("%Y-%m-%dT%H:%M:%S"),
        }
        manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")

    # Rows are streamed to disk in ascending unit order as results come
    # in, with the manifest refreshed after every unit, so an interrupted
    # sweep can resume from what is already on disk.
    executor = ProcessPoolExecutor(max_workers=config.jobs) if config.jobs > 1 and todo else None
    try:
        if executor is not None:
            cfg = asdict(config)
            produced = executor.map(_worker, [(cfg, u) for u in todo], chunksize=1)
        else:
            produced = ((u, compute_unit(config, u)) for u in todo)

        completed: list[str] = []
        with open(csv_path, "w", newline="") as fh:
            fh.write(HEADERS[config.kind] + "\n")
            fh.flush()
            for u in units:
                rows = cached[u] if u in cached else next(produced)[1]
                for row in rows:
                    fh.write(row + "\n")
                fh.flush()
                completed.append(u)
                write_manifest(completed)
    finally:
        if executor is not None:
            executor.shutdown()
    return csv_path


def cumulative_series(records: list[dict], keys: list[str]) -> list[dict]:
    """Running sums of the named columns over records sorted by X."""
    xs = [int(r["X"]) for r in records]
    if xs != sorted(xs):
        raise ValueError("records must be sorted by X")
    out = []
    totals = dict.fromkeys(keys, 0.0)
    for X, r in zip(xs, records):
        for key in keys:
            totals[key] += float(r[key])
        row = {"X": X, "X_end": 2 * X}
        row.update({key: totals[key] for key in keys})
        out.append(row)
    return out
