"""Select the compiled propagator kernel when it was built, else the numpy one."""
import os

from . import _propagate_py

BACKEND = "python"
midpoint_product = _propagate_py.midpoint_product

if os.environ.get("SQUEEZED_OTTO_PURE_PYTHON", "") in ("", "0"):
    try:
        from ._propagate import midpoint_product  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

python_midpoint_product = _propagate_py.midpoint_product
