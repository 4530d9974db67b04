"""Kernel dispatch: compiled extension when available, numpy fallback otherwise.

The active backend is chosen once at import. Set SEQDET_KERNEL_BACKEND to
``python`` or ``c`` to force a choice (forcing ``c`` raises if the extension
was not built). All public functions accept (H, W) float64 arrays; the warp
also accepts a stack (K, H, W) sharing one transform.
"""

import os

import numpy as np

from . import _kernels_py

_BACKENDS = {"python": _kernels_py}
try:
    from . import _kernels_c

    _BACKENDS["c"] = _kernels_c
except ImportError:
    _kernels_c = None

_forced = os.environ.get("SEQDET_KERNEL_BACKEND")
if _forced:
    if _forced not in _BACKENDS:
        raise ImportError(
            f"SEQDET_KERNEL_BACKEND={_forced!r} unavailable; have {sorted(_BACKENDS)}"
        )
    BACKEND = _forced
else:
    BACKEND = "c" if "c" in _BACKENDS else "python"

_active = _BACKENDS[BACKEND]


def available_backends():
    return dict(_BACKENDS)


def affine_warp(src, inv, backend=None):
    """Bilinear warp of a (H, W) array or a (K, H, W) stack; zero padding.

    ``inv`` maps output continuous coordinates (x, y) to input coordinates:
    (a, b, c, d, e, f) with x_in = a*x + b*y + c, y_in = d*x + e*y + f.
    """
    impl = _BACKENDS[backend] if backend else _active
    src = np.asarray(src, dtype=np.float64)
    if src.ndim == 2:
        return impl.affine_warp(src, inv)
    if src.ndim == 3:
        return np.stack([impl.affine_warp(plane, inv) for plane in src])
    raise ValueError(f"expected 2D or 3D array, got shape {src.shape}")


def splat_gaussian_max(heat, cy, cx, radius, sigma, backend=None):
    """In-place max-splat of a unit-peak Gaussian at cell (cy, cx)."""
    impl = _BACKENDS[backend] if backend else _active
    if heat.dtype != np.float64 or not heat.flags["C_CONTIGUOUS"]:
        raise ValueError("heat must be a C-contiguous float64 array")
    impl.splat_gaussian_max(heat, int(cy), int(cx), int(radius), float(sigma))


def local_peak_mask(score, backend=None):
    """Cells that are >= every cell in their 3x3 neighborhood."""
    impl = _BACKENDS[backend] if backend else _active
    return impl.local_peak_mask(np.asarray(score, dtype=np.float64))
