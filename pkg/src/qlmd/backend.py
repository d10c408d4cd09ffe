"""Kernel backend selection.

The compiled extension (qlmd._corecy) is preferred when importable; the
pure-numpy twin (qlmd._corepy) is the fallback.  Override with
QLMD_BACKEND={auto,cython,python}.  Both backends draw from the same
counter-based streams and produce bit-identical sampled results.
"""

from __future__ import annotations

import os

from . import _corepy

_requested = os.environ.get("QLMD_BACKEND", "auto").lower()

kernels = None
BACKEND_NAME = None

if _requested in ("auto", "cython"):
    try:
        from . import _corecy as _compiled

        kernels = _compiled
        BACKEND_NAME = "cython"
    except ImportError:
        if _requested == "cython":
            raise ImportError(
                "QLMD_BACKEND=cython but the compiled extension is not built; "
                "reinstall with a C compiler or use QLMD_BACKEND=python")

if kernels is None:
    if _requested not in ("auto", "python"):
        raise ValueError(f"unknown QLMD_BACKEND {_requested!r}")
    kernels = _corepy
    BACKEND_NAME = "python"


def get_backend(name: str):
    """Fetch a backend module by name (used by the parity tests/benchmark)."""
    if name == "python":
        return _corepy
    if name == "cython":
        from . import _corecy

        return _corecy
    raise ValueError(f"unknown backend {name!r}")
