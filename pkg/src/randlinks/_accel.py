"""numba switch.

Hot loops live in :mod:`randlinks.kernels` twice: as scalar loops compiled
with numba, and as vectorised numpy code. Set ``RANDLINKS_DISABLE_NUMBA=1``
(or run without numba installed) to select the numpy path. The choice is
made once, at import time.
"""

import os

DISABLE_ENV = "RANDLINKS_DISABLE_NUMBA"

_disabled = os.environ.get(DISABLE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _disabled


def njit(func):
    """Compile ``func`` in nopython mode when numba is importable.

    Compilation does not depend on :data:`USE_NUMBA`, so the benchmark can
    compare both paths in one process. Without numba the function is returned
    unchanged and runs as plain Python.
    """
    if not HAVE_NUMBA:
        return func
    return numba.njit(cache=True, nogil=True)(func)
