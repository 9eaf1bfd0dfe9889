"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the numpy
fallback is used.  Set SPACEFORMS_KERNEL=python or =cython to force one
(the benchmark uses this to compare backends).
"""

from __future__ import annotations

import os

_forced = os.environ.get("SPACEFORMS_KERNEL", "").strip().lower()

if _forced == "python":
    from . import _kernels_py as _impl
elif _forced == "cython":
    from . import _kernels_cy as _impl  # type: ignore[attr-defined]
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
conv2_trunc = _impl.conv2_trunc
identity_residual = _impl.identity_residual
identity_residual_jacobian = _impl.identity_residual_jacobian
