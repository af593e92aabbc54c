"""Backend selection for the colouring-search kernels.

Set ``SYMBREAK_NO_NUMBA=1`` to force the pure-numpy kernels even when numba
is importable.
"""

import os

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn

USE_NUMBA = HAVE_NUMBA and os.environ.get("SYMBREAK_NO_NUMBA", "") not in ("1", "true", "yes")


def resolve_backend(backend: str | None) -> str:
    if backend is None:
        return "numba" if USE_NUMBA else "numpy"
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    return backend
