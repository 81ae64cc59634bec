"""Kernel backend selection.

The compiled extension ``nsk._core`` is used when it imports; otherwise, or
when the environment variable ``NSK_PURE`` is set to a non-empty value other
than ``0``, the pure-Python kernels in ``nsk._purecore`` are used.
"""

import os

from nsk import _purecore

if os.environ.get("NSK_PURE", "") not in ("", "0"):
    _impl = _purecore
    BACKEND = "python"
else:
    try:
        from nsk import _core as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _purecore
        BACKEND = "python"

membership_table = _impl.membership_table
factorizations = _impl.factorizations
factorization_components = _impl.factorization_components
integer_rank = _impl.integer_rank
gap_sets_by_genus = _impl.gap_sets_by_genus

__all__ = [
    "BACKEND",
    "membership_table",
    "factorizations",
    "factorization_components",
    "integer_rank",
    "gap_sets_by_genus",
]
