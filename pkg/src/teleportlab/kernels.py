"""Kernel backend selection.

The compiled extension (``_ckernels``) is preferred when importable; the
pure-Python twin (``_pykernels``) is the fallback. Set the environment
variable ``TELEPORTLAB_KERNELS`` to ``compiled`` or ``python`` to force a
backend (``compiled`` raises if the extension is missing).
"""

import os

_choice = os.environ.get("TELEPORTLAB_KERNELS", "auto").strip().lower()

if _choice in ("auto", "", "compiled", "c"):
    try:
        from . import _ckernels as _impl
    except ImportError:
        if _choice in ("compiled", "c"):
            raise
        from . import _pykernels as _impl
elif _choice in ("python", "py", "pure"):
    from . import _pykernels as _impl
else:
    raise ValueError(
        f"unknown TELEPORTLAB_KERNELS value {_choice!r}; use 'auto', 'compiled' or 'python'"
    )

BACKEND = _impl.BACKEND_NAME

eigh = _impl.eigh
eigvalsh = _impl.eigvalsh
output_scores = _impl.output_scores
