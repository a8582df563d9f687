"""Least-squares fitting of C * x^alpha * (log x)^beta growth models.

Everything happens in log space, where both exponents enter linearly:
log y = log C + alpha*log x + beta*log log x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FitResult:
    constant: float
    power: float
    log_power: float
    rms_residual: float
    n_points: int


def fit_power_log(
    xs,
    ys,
    fix_power: float | None = None,
    fix_log_power: float | None = None,
    min_points: int = 3,
) -> FitResult:
    """Fit y = C * x^alpha * (log x)^beta by linear least squares.

    Either exponent may be pinned.  All x must exceed e so that
    log log x is defined and positive-ish; all y must be positive.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise ValueError("xs and ys must be 1-d arrays of equal length")
    if len(np.unique(xs)) < min_points:
        raise ValueError(f"need at least {min_points} distinct sample points")
    if np.any(xs <= math.e) or np.any(ys <= 0):
        raise ValueError("samples must have x > e and y > 0")

    lx = np.log(xs)
    llx = np.log(lx)
    ly = np.log(ys)

    cols = [np.ones_like(lx)]
    rhs = ly.copy()
    if fix_power is None:
        cols.append(lx)
    else:
        rhs -= fix_power * lx
    if fix_log_power is None:
        cols.append(llx)
    else:
        rhs -= fix_log_power * llx
    A = np.column_stack(cols)
    sol, *_ = np.linalg.lstsq(A, rhs, rcond=None)

    pos = 1
    if fix_power is None:
        alpha = float(sol[pos])
        pos += 1
    else:
        alpha = fix_power
    beta = float(sol[pos]) if fix_log_power is None else fix_log_power
    resid = rhs - A @ sol
    return FitResult(
        constant=math.exp(float(sol[0])),
        power=alpha,
        log_power=beta,
        rms_residual=float(np.sqrt(np.mean(resid**2))),
        n_points=int(len(xs)),
    )
