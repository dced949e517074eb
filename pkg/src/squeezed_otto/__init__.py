"""Two-level quantum Otto engine with a squeezed hot reservoir."""
from ._backend import BACKEND
from .errors import (ConsistencyError, NonConvergenceError, NotFoundError, OttoError,
                     OutOfRegimeError, RangeError, ValidationError)
from .params import HBAR, DerivedParams, EngineParams, derive, from_lab_units, nmr_params

__all__ = [
    "BACKEND", "HBAR", "EngineParams", "DerivedParams", "derive", "from_lab_units", "nmr_params",
    "OttoError", "ValidationError", "RangeError", "OutOfRegimeError", "NotFoundError",
    "NonConvergenceError", "ConsistencyError",
]
__version__ = "0.1.0"
