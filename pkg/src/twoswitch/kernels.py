"""Backend selection for the hot kernels.

The compiled Cython module is used when it imports and the graph fits in
64-bit rows; otherwise calls fall through to the pure-Python versions.
Set ``TWOSWITCH_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("TWOSWITCH_PURE_PYTHON"):
        raise ImportError("pure-Python backend forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_C_MAX_N = 64


def _pick(n):
    if _ckernels is not None and n <= _C_MAX_N:
        return _ckernels
    return _pykernels


def census4(n, rows):
    return _pick(n).census4(n, rows)


def subgraph_counts4(n, rows):
    return _pick(n).subgraph_counts4(n, rows)


def active_mask(n, rows):
    return _pick(n).active_mask(n, rows)


def active_switches(n, rows):
    return _pick(n).active_switches(n, rows)


def count_active_switches(n, rows):
    return _pick(n).count_active_switches(n, rows)


def count_k3(n, rows):
    return _pick(n).count_k3(n, rows)


def count_k4(n, rows):
    return _pick(n).count_k4(n, rows)


def realizations(degrees, cap):
    return _pick(len(degrees)).realizations(tuple(degrees), cap)
