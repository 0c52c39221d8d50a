"""Numba toggle.

The convolution kernels are compiled with numba when it is installed.  Set
ROTOBLUR_NO_NUMBA=1 to force the pure-numpy code path (useful for debugging
and for the benchmark baseline).  When numba is missing the numpy path is
used silently.
"""
from __future__ import annotations

import os


def _numba_wanted() -> bool:
    if os.environ.get("ROTOBLUR_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _numba_wanted()

if NUMBA_ENABLED:
    from numba import njit
else:
    def njit(*args, **kwargs):
        # no-op decorator so the jit kernels stay importable without numba
        def wrap(func):
            return func

        if args and callable(args[0]):
            return args[0]
        return wrap
