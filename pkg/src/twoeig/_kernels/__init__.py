"""Kernel backend selection.

The compiled extension is preferred when importable; setting the
environment variable ``TWOEIG_PURE=1`` (before import) forces the
pure-Python fallback.  Both backends share signatures and iteration
order, so results are interchangeable.
"""
from __future__ import annotations

import os

from . import pure

_impl = pure
if os.environ.get("TWOEIG_PURE", "") in ("", "0"):
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND: str = _impl.BACKEND

induced_p4 = _impl.induced_p4
coclique3 = _impl.coclique3
bfs_unique_distances = _impl.bfs_unique_distances
jacobi_sweeps = _impl.jacobi_sweeps


def available_backends() -> tuple[str, ...]:
    """Names of the importable kernel backends."""
    names = ["pure"]
    try:
        from . import _native  # noqa: F401
    except ImportError:
        pass
    else:
        names.insert(0, "native")
    return tuple(names)
