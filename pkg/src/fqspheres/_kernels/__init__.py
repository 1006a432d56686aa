"""Kernel backend selection.

The compiled extension is preferred when present. Set the environment
variable FQSPHERES_KERNELS to ``pure`` or ``compiled`` before import
to force a backend; forcing ``compiled`` raises if the extension is
missing instead of silently falling back.
"""

from __future__ import annotations

import os

from . import _pykernels

_FORCED = os.environ.get("FQSPHERES_KERNELS", "").strip().lower()
if _FORCED not in ("", "pure", "compiled"):
    raise ValueError(
        f"FQSPHERES_KERNELS must be 'pure' or 'compiled', got {_FORCED!r}"
    )

if _FORCED == "pure":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        if _FORCED == "compiled":
            raise
        _impl = _pykernels

BACKEND = _impl.BACKEND_NAME

incidences_naive = _impl.incidences_naive
incidences_bucketed = _impl.incidences_bucketed
incidences_lifted = _impl.incidences_lifted
paraboloid_diff_table = _impl.paraboloid_diff_table
determined_circle_ids = _impl.determined_circle_ids
circle_point_counts = _impl.circle_point_counts


def kernel_backend() -> str:
    """Name of the active backend, ``pure`` or ``compiled``."""
    return BACKEND
