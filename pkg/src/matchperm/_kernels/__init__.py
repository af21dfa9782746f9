"""Kernel selection: compiled extension if available, pure Python otherwise.

Set MATCHPERM_PURE=1 to force the pure-Python kernels.
"""

import os

if os.environ.get("MATCHPERM_PURE") == "1":
    from . import _pure as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
max_matching = _impl.max_matching
ryser = _impl.ryser
