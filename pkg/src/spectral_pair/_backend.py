"""Kernel backend selection: compiled extension when available, pure Python otherwise.

Set SPECTRAL_PAIR_BACKEND=py or =cy to force a backend (cy raises if the
extension was not built).
"""

import os

_forced = os.environ.get("SPECTRAL_PAIR_BACKEND", "").strip().lower()

if _forced in ("py", "python"):
    from . import _kernels_py as kernels
elif _forced in ("cy", "cython", "c"):
    from . import _kernels_cy as kernels  # type: ignore[attr-defined]
elif _forced:
    raise ImportError(f"unknown SPECTRAL_PAIR_BACKEND value: {_forced!r}")
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND
