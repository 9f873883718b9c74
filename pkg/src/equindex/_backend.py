"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``EQUINDEX_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

_native = None
if not os.environ.get("EQUINDEX_PURE_PYTHON"):
    try:
        from . import _kernels as _native
    except ImportError:
        _native = None

BACKEND = "cython" if _native is not None else "python"

# inputs at or above this go to the Python path so the C kernel never overflows
_NATIVE_LIMIT = 1 << 31


def lucas_binom(n: int, k: int, p: int) -> int:
    if _native is not None and n < _NATIVE_LIMIT and p < _NATIVE_LIMIT:
        return _native.lucas_binom(n, k, p)
    return _kernels_py.lucas_binom(n, k, p)


def first_nonzero_in_row(n: int, lo: int, hi: int, p: int) -> int:
    if _native is not None and max(n, hi, p) < _NATIVE_LIMIT:
        return _native.first_nonzero_in_row(n, lo, hi, p)
    return _kernels_py.first_nonzero_in_row(n, lo, hi, p)

