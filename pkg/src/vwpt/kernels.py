"""Kernel selection: compiled extension if present, pure Python otherwise.

VWPT_PURE=1 forces the pure kernels regardless of what is installed.
"""

import os

if os.environ.get("VWPT_PURE"):
    from vwpt import _convolve_py as _impl
else:
    try:
        from vwpt import _convolve as _impl  # type: ignore[attr-defined]
    except ImportError:
        from vwpt import _convolve_py as _impl

dict_mul = _impl.dict_mul
dict_mul_bounded = _impl.dict_mul_bounded
BACKEND = _impl.BACKEND
