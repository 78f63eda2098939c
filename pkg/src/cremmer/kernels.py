"""Backend selection for the sparse polynomial kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Set ``CREMMER_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("CREMMER_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernels import add, mono_mul, mul, remap, scale, sub

    BACKEND = "python"
else:
    try:
        from ._ckernels import add, mono_mul, mul, remap, scale, sub

        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._pykernels import add, mono_mul, mul, remap, scale, sub

        BACKEND = "python"

__all__ = ["BACKEND", "add", "mono_mul", "mul", "remap", "scale", "sub"]
