"""Backend selection for the recurrence kernels.

The compiled extension is preferred when present; set the environment
variable ``CURVEPOLY_PURE_PYTHON=1`` to force the NumPy fallback (used by the
benchmark to compare both backends).
"""
import os

from . import _kernels_py

if os.environ.get("CURVEPOLY_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

vander = _impl.vander
vander_derivs = _impl.vander_derivs
clenshaw = _impl.clenshaw

__all__ = ["BACKEND", "vander", "vander_derivs", "clenshaw"]
