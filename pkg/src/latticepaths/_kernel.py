"""Backend selection for the counting kernels.

Prefers the compiled Cython module `_fastpaths` when it imported cleanly;
falls back to the pure-Python `_purepaths` otherwise.  Setting the
environment variable LATTICEPATHS_BACKEND=python forces the fallback, which
the backend-agreement tests and the benchmark use.

The compiled kernels work in int64 and raise OverflowError when a count
would leave that range; callers retry on the pure backend, so results are
exact either way.
"""

import os

from . import _purepaths

_forced = os.environ.get("LATTICEPATHS_BACKEND", "").strip().lower()

if _forced in ("", "cython", "fast"):
    try:
        from . import _fastpaths as _impl
        BACKEND = "cython"
    except ImportError:
        if _forced in ("cython", "fast"):
            raise
        _impl = _purepaths
        BACKEND = "python"
elif _forced == "python":
    _impl = _purepaths
    BACKEND = "python"
else:
    raise ValueError("LATTICEPATHS_BACKEND must be 'cython' or 'python', got %r" % _forced)


def _with_fallback(name):
    fast = getattr(_impl, name)
    if _impl is _purepaths:
        return fast
    pure = getattr(_purepaths, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return pure(*args)

    call.__name__ = name
    return call


count_monotone_2d = _with_fallback("count_monotone_2d")
count_monotone_3d = _with_fallback("count_monotone_3d")
count_fixed_1d = _with_fallback("count_fixed_1d")
count_fixed_2d = _with_fallback("count_fixed_2d")
count_fixed_3d = _with_fallback("count_fixed_3d")
