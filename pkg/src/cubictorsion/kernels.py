"""Kernel backend selection.

Imports the compiled extension when it is available and falls back to the
numpy implementation otherwise.  Set CUBICTORSION_PURE=1 to force the pure
backend (useful for benchmarking and for debugging the extension).
"""

from __future__ import annotations

import os

if os.environ.get("CUBICTORSION_PURE"):
    from cubictorsion import _kernels_py as _impl
else:
    try:
        from cubictorsion import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from cubictorsion import _kernels_py as _impl

BACKEND: str = _impl.BACKEND

closure = _impl.closure
element_orders = _impl.element_orders
normalizer = _impl.normalizer
image_orders = _impl.image_orders
prime_extensions = _impl.prime_extensions
conj_members = _impl.conj_members
orbit_canonical = _impl.orbit_canonical
