"""Kernel backend selection.

The compiled extension is preferred when present; setting the
environment variable THETASWEEP_PURE=1 forces the numpy fallback
(useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

if os.environ.get("THETASWEEP_PURE"):
    from . import _kernels_py as kernels

    _BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        _BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels

        _BACKEND = "python"


def backend_name() -> str:
    return _BACKEND
