"""Kernel backend selection.

Prefers the compiled extension; falls back to the NumPy implementation when
the extension is not built.  Set LINKCOHESION_PURE=1 to force the fallback
(used by the backend-parity tests and the benchmark).
"""

import os

from . import _kernels_py

if os.environ.get("LINKCOHESION_PURE", "").lower() in {"1", "true", "yes"}:
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

hop_strengths = _impl.hop_strengths
truss_peel = _impl.truss_peel
brandes_edge_betweenness = _impl.brandes_edge_betweenness
