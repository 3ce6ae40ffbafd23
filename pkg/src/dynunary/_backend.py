"""Kernel backend selection.

The compiled kernels are preferred when the extension is importable; the
pure-Python module is the fallback.  Set DYNUNARY_BACKEND=pure or
DYNUNARY_BACKEND=compiled to force one side.
"""

import os

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:
    _kernels_cy = None


def _select():
    choice = os.environ.get("DYNUNARY_BACKEND", "").strip().lower()
    if choice == "pure":
        return _kernels_py
    if choice == "compiled":
        if _kernels_cy is None:
            raise ImportError(
                "DYNUNARY_BACKEND=compiled but the extension is not built"
            )
        return _kernels_cy
    if choice:
        raise ImportError(f"unknown DYNUNARY_BACKEND value {choice!r}")
    return _kernels_cy if _kernels_cy is not None else _kernels_py


kernels = _select()
BACKEND: str = kernels.BACKEND
