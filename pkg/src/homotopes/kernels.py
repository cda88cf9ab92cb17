"""Kernel backend selection.

The compiled extension is used when it imported cleanly; setting
HOMOTOPES_PURE=1 forces the pure-Python fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("HOMOTOPES_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "compiled"

contract = _impl.contract
assoc_scan = _impl.assoc_scan
int_rank = _impl.int_rank
