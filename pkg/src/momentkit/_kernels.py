"""Descent-kernel backend selection.

Prefers the compiled extension; falls back to the numpy implementation when
the extension was not built.  Set ``MOMENTKIT_PURE_PYTHON=1`` to force the
fallback (used by the benchmark and by backend-equivalence tests).
"""

from __future__ import annotations

import os

from . import _descent_py

if os.environ.get("MOMENTKIT_PURE_PYTHON", "").strip() in ("1", "true", "yes"):
    _impl = _descent_py
else:
    try:
        from . import _descent as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _descent_py

BACKEND: str = _impl.BACKEND
HIT_MAX_ITERS: int = _impl.HIT_MAX_ITERS
HIT_GRAD_TOL: int = _impl.HIT_GRAD_TOL
HIT_F_TOL: int = _impl.HIT_F_TOL

objective = _impl.objective
descend = _impl.descend


def available_backends():
    """Names of importable kernel backends."""
    names = ["python"]
    try:
        from . import _descent  # noqa: F401
        names.insert(0, "compiled")
    except ImportError:
        pass
    return names
