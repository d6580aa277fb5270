"""Kernel backend selection.

The compiled extension is preferred when it built; set WEYLTRUNC_PURE=1
to force the pure backend.  Both implement the same contract and the test
suite asserts they agree bit for bit.
"""

import os

from . import _pure

if os.environ.get("WEYLTRUNC_PURE"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND
descend = _impl.descend

__all__ = ["BACKEND", "descend"]
