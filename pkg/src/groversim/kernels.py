"""Kernel backend selection: compiled core when available, numpy otherwise.

Set GROVERSIM_KERNELS=python or =cython to force a backend.  Forcing
cython when the extension was never built is an import error; anything
else falls back silently so a source checkout works without compiling.
"""

import os

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:
    _kernels_cy = None


def _select():
    forced = os.environ.get("GROVERSIM_KERNELS", "").strip().lower()
    if forced not in ("", "python", "cython"):
        raise ValueError(f"GROVERSIM_KERNELS must be 'python' or 'cython', got {forced!r}")
    if forced == "python":
        return _kernels_py, "python"
    if forced == "cython" and _kernels_cy is None:
        raise ImportError("GROVERSIM_KERNELS=cython but the compiled extension is not built")
    if _kernels_cy is not None:
        return _kernels_cy, "cython"
    return _kernels_py, "python"


_impl, BACKEND = _select()

# Late-bound module attribute: benchmarks and tests may swap this out.
apply_2x2 = _impl.apply_2x2
