"""Kernel backend selection.

The compiled extension is used when it was built and ``GAUSSCOVER_PURE`` is
not set; otherwise the pure-Python module is used.  ``BACKEND`` names the
active one.
"""
import os

from . import _kernels_py

try:
    if os.environ.get("GAUSSCOVER_PURE"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _kernels_py
    BACKEND = "python"

chord_indices = _impl.chord_indices
r1_positions = _impl.r1_positions
r2_blocks = _impl.r2_blocks


def backends():
    """Mapping of every importable backend name to its module."""
    out = {"python": _kernels_py}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
