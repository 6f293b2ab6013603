"""Backend selection for the GF(2) hot loops.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``GRASSCODE_PURE`` is set to a non-empty value, the
pure-Python implementation takes over. ``BACKEND`` names the active one.
"""

import os

from . import _pykernels

if os.environ.get("GRASSCODE_PURE"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

gf2_rank = _impl.gf2_rank
first_conflict = _impl.first_conflict


def backends() -> dict:
    """Every importable backend by name (for comparisons and benchmarks)."""
    out = {"python": _pykernels}
    try:
        from . import _kernels

        out["cython"] = _kernels
    except ImportError:
        pass
    return out
