"""Moment statistics of theta values over character classes.

Classes: "even_all" sums over every even character, "even_nontrivial"
drops the principal character, "odd" sums over odd characters.  The
even classes require an eta=0 table, the odd class an eta=1 table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fitting import FitResult, fit_power_log
from .theta import ThetaTable

CLASSES = ("even_nontrivial", "even_all", "odd")


@dataclass(frozen=True)
class MomentRecord:
    p: int
    k: int
    cls: str
    value: float
    normalizer: float
    ratio: float


def predicted_normalizer(p: int, k: int, cls: str) -> float:
    """Main term of the proved (k <= 2) or conjectured (k >= 3) growth.

    Conjectural constants are unknown, so only the p- and log-powers are
    encoded; ratios against these normalizers are meaningful up to a
    constant.
    """
    lp = math.log(p)
    if cls == "odd":
        if k == 1:
            return p**2.5 / (16 * math.pi * math.sqrt(2))
        if k == 2:
            return 3 * p**4 * lp / (512 * math.pi**3)
        return p ** (1.5 * k + 1) * lp ** ((k - 1) ** 2)
    if cls == "even_all":
        if k == 1:
            return p**1.5 / (4 * math.sqrt(2))
        if k == 2:
            return 3 * p**2 * lp / (16 * math.pi)
        return float(p**k)  # principal character dominates
    if cls == "even_nontrivial":
        if k == 1:
            return p**1.5 / (4 * math.sqrt(2))
        if k == 2:
            return 3 * p**2 * lp / (16 * math.pi)
        return p ** (0.5 * k + 1) * lp ** ((k - 1) ** 2)
    raise ValueError(f"unknown class {cls!r}")


def _power_sum(mags: np.ndarray, k: int) -> float:
    # Descending order + exact-rounding sum: 2k-th powers span many
    # orders of magnitude.
    powers = np.sort(mags)[::-1] ** (2 * k)
    return math.fsum(powers.tolist())


def moment_even(table: ThetaTable, k: int, include_principal: bool = False) -> MomentRecord:
    if k < 1:
        raise ValueError("k must be >= 1")
    if table.request.eta != 0:
        raise ValueError("even-class moments need an eta=0 table")
    mags = table.magnitudes(parity=0, include_principal=include_principal)
    value = _power_sum(mags, k)
    cls = "even_all" if include_principal else "even_nontrivial"
    norm = predicted_normalizer(table.request.p, k, cls)
    return MomentRecord(p=table.request.p, k=k, cls=cls, value=value,
                        normalizer=norm, ratio=value / norm)


def moment_odd(table: ThetaTable, k: int) -> MomentRecord:
    if k < 1:
        raise ValueError("k must be >= 1")
    if table.request.eta != 1:
        raise ValueError("odd-class moments need an eta=1 table")
    mags = table.magnitudes(parity=1)
    value = _power_sum(mags, k)
    norm = predicted_normalizer(table.request.p, k, "odd")
    return MomentRecord(p=table.request.p, k=k, cls="odd", value=value,
                        normalizer=norm, ratio=value / norm)


def exponent_fit(records, free_log_power: bool = True) -> FitResult:
    """Fit value = C * p^alpha * (log p)^beta over records sharing (k, class)."""
    records = list(records)
    if len({(r.k, r.cls) for r in records}) != 1:
        raise ValueError("records must share a single (k, class)")
    ps = [r.p for r in records]
    vs = [r.value for r in records]
    fix_beta = None if free_log_power else 0.0
    return fit_power_log(ps, vs, fix_log_power=fix_beta)


def nonvanishing_scan(table: ThetaTable, parity: int) -> tuple[float, int]:
    """Minimum |theta| over nonprincipal characters of the given parity.

    Returns (min magnitude, attaining character index); ties go to the
    smallest index.
    """
    if table.request.x != 1.0:
        raise ValueError("nonvanishing scan is defined at x = 1")
    start = 2 if parity == 0 else 1
    mags = np.abs(table.values[start::2])
    if mags.size == 0:
        raise ValueError("empty character class")
    pos = int(np.argmin(mags))
    return float(mags[pos]), start + 2 * pos
