"""Select the kernel implementation at import time.

The compiled ``_kernels`` extension is preferred. Setting ``WWK_PURE_PYTHON=1``
forces the numpy fallback, as does a missing or broken build.
"""
import os

if os.environ.get("WWK_PURE_PYTHON", "") not in ("", "0"):
    from wwk import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from wwk import _kernels as kernels

        BACKEND = "cython"
    except ImportError:
        from wwk import _kernels_py as kernels

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
