"""
Optional numba acceleration.

Kernels are written once as plain Python over numpy arrays and compiled
with ``numba.njit`` when numba is importable and ``ORELT_DISABLE_NUMBA``
is unset (or "0").  Otherwise callers take the vectorized numpy path.
"""
import os

_flag = os.environ.get("ORELT_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _flag not in ("", "0", "false", "no")

try:
    if DISABLED_BY_ENV:
        raise ImportError
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    if HAVE_NUMBA:
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]
    return lambda f: f


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
