import math

import numpy as np
import pytest
import scipy.fft

from thetasweep.char_core import build_prime_context
from thetasweep.theta import (
    ThetaRequest,
    theta_all_characters,
    theta_naive,
    truncation_length,
)

# Frozen by the direct-summation oracle (math.fsum over the defining series).
THETA_P5_J0 = 0.6180341750274745
THETA_P3_J1_ETA1 = 0.3205907789648638


def test_request_validation():
    with pytest.raises(ValueError):
        ThetaRequest(p=7, eta=2)
    with pytest.raises(ValueError):
        ThetaRequest(p=7, eta=0, x=-1.0)
    with pytest.raises(ValueError):
        ThetaRequest(p=7, eta=0, tail_eps=2.0)


def test_truncation_length_example():
    N = truncation_length(101, 0, 1.0, 1e-15)
    assert N == 34
    # direct tail summation confirms the bound
    n = np.arange(N + 1, 4 * N)
    tail = float(np.sum(np.exp(-math.pi * n.astype(float) ** 2 / 101)))
    assert tail < 1e-15


def test_truncation_monotone_in_p():
    for p in (101, 499, 1009):
        assert truncation_length(2 * p, 0, 1.0, 1e-15) > truncation_length(p, 0, 1.0, 1e-15)


def test_truncation_large_x():
    assert truncation_length(101, 0, 1e9, 1e-12) == 1


def test_truncation_rejects_bad_eps():
    with pytest.raises(ValueError):
        truncation_length(101, 0, 1.0, -1e-3)


def test_naive_oracle_values():
    ctx5 = build_prime_context(5)
    assert theta_naive(ctx5, 0, 0, 1.0, 100) == pytest.approx(THETA_P5_J0, abs=1e-14)
    ctx3 = build_prime_context(3)
    v = theta_naive(ctx3, 1, 1, 1.0, 60)
    assert v.real == pytest.approx(THETA_P3_J1_ETA1, abs=1e-14)
    assert abs(v.imag) < 1e-14


def test_naive_conjugate_pairs():
    ctx = build_prime_context(13)
    for j in range(1, 12):
        a = theta_naive(ctx, j, 0, 1.0, 80)
        b = theta_naive(ctx, 12 - j, 0, 1.0, 80)
        assert a == pytest.approx(b.conjugate(), abs=1e-12)


@pytest.mark.parametrize("p", [101, 499])
@pytest.mark.parametrize("eta", [0, 1])
def test_bulk_matches_naive(p, eta):
    ctx = build_prime_context(p)
    table = theta_all_characters(ctx, eta)
    naive = np.array([theta_naive(ctx, j, eta, 1.0, table.N) for j in range(p - 1)])
    scale = np.max(np.abs(naive))
    assert np.max(np.abs(table.values - naive)) / scale <= 1e-9


def test_table_symmetries_and_tail():
    for p in (101, 1009):
        ctx = build_prime_context(p)
        table = theta_all_characters(ctx, 0)
        vals = table.values
        assert abs(vals[0].imag) < 1e-12
        assert np.max(np.abs(vals[1:][::-1] - np.conj(vals[1:]))) < 1e-12
        assert table.tail_bound < table.request.tail_eps * max(1, math.sqrt(p))


def test_parseval():
    for p, eta in ((101, 0), (499, 1)):
        ctx = build_prime_context(p)
        table = theta_all_characters(ctx, eta)
        n = np.arange(1, table.N + 1)
        n = n[n % p != 0]
        coeff = np.exp(-math.pi * n.astype(float) ** 2 / p)
        if eta:
            coeff = coeff * n
        w = np.bincount(ctx.ind[(n % p) - 1], weights=coeff, minlength=p - 1)
        lhs = np.sum(np.abs(table.values) ** 2)
        rhs = (p - 1) * np.sum(w**2)
        assert abs(lhs - rhs) / rhs <= 1e-9


def _bulk_with_length(ctx, eta, N):
    n = np.arange(1, N + 1)
    keep = n % ctx.p != 0
    n = n[keep]
    coeff = np.exp(-math.pi * n.astype(float) ** 2 / ctx.p)
    if eta:
        coeff = coeff * n
    w = np.bincount(ctx.ind[(n % ctx.p) - 1], weights=coeff, minlength=ctx.order)
    return ctx.order * scipy.fft.ifft(w)


def test_truncation_doubling_stability():
    for p in (101, 1009):
        ctx = build_prime_context(p)
        for eta in (0, 1):
            table = theta_all_characters(ctx, eta, tail_eps=1e-15)
            doubled = _bulk_with_length(ctx, eta, 2 * table.N)
            scale = np.max(np.abs(doubled))
            assert np.max(np.abs(table.values - doubled)) / scale < 1e-12


def test_scaling_sanity_first_term_dominates():
    for p in (101, 499):
        ctx = build_prime_context(p)
        for eta in (0, 1):
            table = theta_all_characters(ctx, eta, x=p / math.pi)
            slack = sum(n * math.exp(-n * n) for n in range(2, 30))
            assert np.max(np.abs(table.values - math.exp(-1))) <= slack + 1e-12


def test_naive_rejects_bad_N():
    ctx = build_prime_context(7)
    with pytest.raises(ValueError):
        theta_naive(ctx, 0, 0, 1.0, 0)
