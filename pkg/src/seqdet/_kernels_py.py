"""Pure-numpy implementations of the hot kernels.

Reference semantics for the compiled backend in ``_kernels_c.pyx``: both
backends must agree to float rounding (exactly, where no interpolation
happens). Conventions: arrays are (H, W) float64, row = y, col = x; pixel
(i, j) has its center at continuous coordinates (j + 0.5, i + 0.5).
"""

import numpy as np


def affine_warp(src, inv):
    """Resample ``src`` under an affine map with bilinear interpolation.

    ``inv`` = (a, b, c, d, e, f) maps *output* continuous coordinates to
    *input* coordinates: x_in = a*x + b*y + c, y_in = d*x + e*y + f.
    Samples outside the input are zero.
    """
    src = np.ascontiguousarray(src, dtype=np.float64)
    h, w = src.shape
    a, b, c, d, e, f = (float(v) for v in inv)

    jj, ii = np.meshgrid(np.arange(w, dtype=np.float64), np.arange(h, dtype=np.float64))
    x_out = jj + 0.5
    y_out = ii + 0.5
    # sample position in pixel-index space (pixel centers at integers)
    u = a * x_out + b * y_out + c - 0.5
    v = d * x_out + e * y_out + f - 0.5

    j0 = np.floor(u).astype(np.int64)
    i0 = np.floor(v).astype(np.int64)
    fu = u - j0
    fv = v - i0

    out = np.zeros_like(src)
    for di, dj, wgt in (
        (0, 0, (1.0 - fv) * (1.0 - fu)),
        (0, 1, (1.0 - fv) * fu),
        (1, 0, fv * (1.0 - fu)),
        (1, 1, fv * fu),
    ):
        i = i0 + di
        j = j0 + dj
        valid = (i >= 0) & (i < h) & (j >= 0) & (j < w)
        vals = src[np.clip(i, 0, h - 1), np.clip(j, 0, w - 1)]
        out += np.where(valid, wgt * vals, 0.0)
    return out


def splat_gaussian_max(heat, cy, cx, radius, sigma):
    """Max-combine an unnormalized Gaussian bump into ``heat`` in place.

    The bump peaks at exactly 1.0 at cell (cy, cx) and covers the window
    of half-width ``radius`` cells, clipped at the borders. ``radius <= 0``
    or ``sigma <= 0`` degenerates to marking the single center cell.
    """
    h, w = heat.shape
    if not (0 <= cy < h and 0 <= cx < w):
        raise ValueError(f"peak cell ({cy}, {cx}) outside {h}x{w} map")
    if radius <= 0 or sigma <= 0:
        heat[cy, cx] = max(heat[cy, cx], 1.0)
        return

    top = max(0, cy - radius)
    bottom = min(h, cy + radius + 1)
    left = max(0, cx - radius)
    right = min(w, cx + radius + 1)
    dy = np.arange(top, bottom, dtype=np.float64) - cy
    dx = np.arange(left, right, dtype=np.float64) - cx
    bump = np.exp(-(dy[:, None] ** 2 + dx[None, :] ** 2) / (2.0 * sigma * sigma))
    np.maximum(heat[top:bottom, left:right], bump, out=heat[top:bottom, left:right])


def local_peak_mask(score):
    """Boolean mask of cells that are >= all cells in their 3x3 neighborhood."""
    score = np.ascontiguousarray(score, dtype=np.float64)
    padded = np.pad(score, 1, mode="constant", constant_values=-np.inf)
    neighborhood_max = score.copy()
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            h, w = score.shape
            shifted = padded[1 + di : 1 + di + h, 1 + dj : 1 + dj + w]
            np.maximum(neighborhood_max, shifted, out=neighborhood_max)
    return score >= neighborhood_max
