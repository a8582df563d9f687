"""Dirichlet-character theta functions, their moments over primes, and
character-sum statistics at desk scale.

The heavy inner loops (prefix character-sum maxima, bucket-weight
accumulation) live in a compiled extension when available; a pure
numpy fallback is selected at import time otherwise.  See
``thetasweep.backend_name()`` for which one is active.
"""

from ._backend import backend_name
from .char_core import PrimeContext, build_prime_context, character_value
from .theta import ThetaRequest, ThetaTable, theta_all_characters, theta_naive
from .moments import MomentRecord, moment_even, moment_odd, nonvanishing_scan
from .fitting import FitResult

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "PrimeContext",
    "build_prime_context",
    "character_value",
    "ThetaRequest",
    "ThetaTable",
    "theta_all_characters",
    "theta_naive",
    "MomentRecord",
    "moment_even",
    "moment_odd",
    "nonvanishing_scan",
    "FitResult",
    "__version__",
]
