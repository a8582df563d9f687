"""Bundled exact-identity suites behind the `verify` CLI subcommand.

Each suite returns a list of (name, measured_error, tolerance, passed)
tuples; a suite passes iff every check does.
"""

from __future__ import annotations

import math

import numpy as np

from .char_core import (
    build_prime_context,
    character_value,
    gauss_sum,
    is_prime,
    twisted_gauss_sum,
)
from .charsum import MollifierSpec, epsilon_for_x_cut, large_sieve_check, mollifier_sums
from .divisors import DivisorSpec, congruence_count, restricted_divisor_count
from .theta import theta_all_characters, theta_naive

Check = tuple[str, float, float, bool]


def _check(name: str, err: float, tol: float) -> Check:
    return (name, err, tol, err <= tol)


def suite_orthogonality(pmax: int = 101) -> list[Check]:
    out = []
    for p in range(3, pmax + 1):
        if not is_prime(p):
            continue
        ctx = build_prime_context(p)
        m = ctx.order
        chars = ctx.roots[np.outer(np.arange(m), ctx.ind) % m]  # chars[j, n-1]
        gram = chars.T @ chars.conj()  # sum over characters j
        err = float(np.max(np.abs(gram - m * np.eye(m))))
        out.append(_check(f"full-group orthogonality p={p}", err, 1e-9))

        even = chars[0::2]
        egram = even.T @ even.conj()
        expected = np.zeros((m, m))
        for a in range(1, p):
            expected[a - 1, a - 1] = m / 2
            expected[a - 1, (p - a) - 1] = m / 2
        err = float(np.max(np.abs(egram - expected)))
        out.append(_check(f"even-subgroup orthogonality p={p}", err, 1e-9))

        sums = np.abs(chars[1:].sum(axis=1))
        out.append(_check(f"full-period sums p={p}", float(sums.max(initial=0.0)), 1e-9))
        expect = np.where(np.arange(m) % 2 == 0, 1.0, -1.0)
        out.append(_check(
            f"parity chi(-1)=(-1)^j p={p}",
            float(np.max(np.abs(chars[:, p - 2] - expect))), 1e-9,
        ))
    return out


def suite_gauss(pmax: int = 211, n_twisted: int = 50, seed: int = 7) -> list[Check]:
    out = []
    primes = [p for p in range(3, pmax + 1) if is_prime(p)]
    for p in primes:
        ctx = build_prime_context(p)
        errs = [abs(abs(gauss_sum(ctx, j)) - math.sqrt(p)) for j in range(1, p - 1)]
        out.append(_check(f"|tau|=sqrt(p) p={p}", max(errs), 1e-8))
    rng = np.random.default_rng(seed)
    for _ in range(n_twisted):
        p = int(rng.choice(primes[2:]))
        ctx = build_prime_context(p)
        j = int(rng.integers(1, p - 1))
        b = int(rng.integers(1, p))
        tau_bar = gauss_sum(ctx, (ctx.order - j) % ctx.order)  # tau(conj chi_j)
        lhs = character_value(ctx, j, b) * tau_bar
        rhs = twisted_gauss_sum(ctx, j, b)
        out.append(_check(f"twisted identity p={p} j={j} b={b}", abs(lhs - rhs), 1e-8))
    return out


def suite_dft(primes=(101, 499, 1009, 2003)) -> list[Check]:
    out = []
    for p in primes:
        ctx = build_prime_context(p)
        for eta in (0, 1):
            table = theta_all_characters(ctx, eta)
            naive = np.array([
                theta_naive(ctx, j, eta, 1.0, table.N) for j in range(p - 1)
            ])
            scale = float(np.max(np.abs(naive)))
            err = float(np.max(np.abs(table.values - naive))) / scale
            out.append(_check(f"bulk vs naive p={p} eta={eta}", err, 1e-9))
    return out


def suite_parseval(primes=(101, 499, 1009, 2003)) -> list[Check]:
    out = []
    for p in primes:
        ctx = build_prime_context(p)
        for eta in (0, 1):
            table = theta_all_characters(ctx, eta)
            n = np.arange(1, table.N + 1)
            n = n[n % p != 0]
            coeff = np.exp(-math.pi * (n.astype(float) ** 2) / p)
            if eta:
                coeff = coeff * n
            w = np.bincount(ctx.ind[(n % p) - 1], weights=coeff, minlength=p - 1)
            lhs = float(np.sum(np.abs(table.values) ** 2))
            rhs = float((p - 1) * np.sum(w**2))
            out.append(_check(f"parseval p={p} eta={eta}", abs(lhs - rhs) / rhs, 1e-9))
    return out


def suite_largesieve(n_trials: int = 100, seed: int = 11) -> list[Check]:
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n_trials):
        H = int(rng.integers(1, 65))
        R = int(rng.integers(1, 33))
        a = rng.normal(size=H) + 1j * rng.normal(size=H)
        lhs, rhs, ok = large_sieve_check(a, R)
        margin = lhs / rhs if rhs > 0 else math.inf
        out.append(_check(f"large sieve trial {i} H={H} R={R}", margin, 1.0))
    return out


def suite_mollifier_identity(primes=(101, 199, 499), ks=(2, 3),
                             x_cuts=(2, 8)) -> list[Check]:
    out = []
    for p in primes:
        ctx = build_prime_context(p)
        t_cut = math.floor(math.sqrt(p))
        for k in ks:
            for x_cut in x_cuts:
                for xi_name, xi in (("one", None), ("one-plus-inv", lambda n: 1 + 1 / n)):
                    eps = epsilon_for_x_cut(p, x_cut)
                    tau = math.log(t_cut + 0.5) / math.log(p)
                    spec = MollifierSpec(p=p, k=k, epsilon=eps, tau=tau, xi=xi)
                    assert spec.x_cut == x_cut and spec.t_cut == t_cut
                    ms = mollifier_sums(ctx, spec)
                    tag = f"p={p} k={k} x={x_cut} xi={xi_name}"

                    count2 = congruence_count(p, k, x_cut)
                    rhs2 = (p - 1) / 2 * count2
                    out.append(_check(f"sigma2 identity {tag}",
                                      abs(ms.sigma2 - rhs2) / rhs2, 1e-9))

                    count1 = congruence_count(p, k, x_cut, t_cut=t_cut, xi=xi)
                    principal = (
                        abs(sum((xi(n) if xi else 1.0) for n in range(1, t_cut + 1))) ** 2
                        * float(x_cut) ** (2 * k - 2)
                    )
                    rhs1 = (p - 1) / 2 * count1 - principal
                    out.append(_check(f"sigma1 identity {tag}",
                                      abs(ms.sigma1 - rhs1) / abs(rhs1), 1e-9))
    return out


def suite_divisor_oracle(n_random: int = 20, seed: int = 13) -> list[Check]:
    out = []
    base = restricted_divisor_count(DivisorSpec(k=2, T=2.0, gamma=(1.0, 1.0)))
    out.append(_check("k=2 T=2 count=6", abs(base - 6), 0.0))
    rng = np.random.default_rng(seed)
    for i in range(n_random):
        k = int(rng.integers(1, 4))
        T = float(rng.integers(2, 13))
        gamma = tuple(float(g) for g in rng.uniform(0.4, 1.0, size=k))
        spec = DivisorSpec(k=k, T=T, gamma=gamma)
        a = restricted_divisor_count(spec, strategy="enumeration")
        b = restricted_divisor_count(spec, strategy="histogram")
        out.append(_check(f"strategy agreement trial {i}", abs(a - b), 0.0))
    return out


SUITES = {
    "orthogonality": suite_orthogonality,
    "dft": suite_dft,
    "gauss": suite_gauss,
    "parseval": suite_parseval,
    "largesieve": suite_largesieve,
    "mollifier-identity": suite_mollifier_identity,
    "divisor-oracle": suite_divisor_oracle,
}


def run_suite(name: str) -> tuple[bool, list[Check]]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    checks = SUITES[name]()
    return all(c[3] for c in checks), checks
