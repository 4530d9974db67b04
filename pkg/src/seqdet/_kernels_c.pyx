# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels. Must match ``_kernels_py`` semantics exactly."""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, floor

cnp.import_array()


def affine_warp(src, inv):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] s = np.ascontiguousarray(src, dtype=np.float64)
    cdef Py_ssize_t h = s.shape[0]
    cdef Py_ssize_t w = s.shape[1]
    cdef double a = inv[0], b = inv[1], c = inv[2]
    cdef double d = inv[3], e = inv[4], f = inv[5]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.zeros((h, w), dtype=np.float64)

    cdef Py_ssize_t i, j, i0, j0
    cdef double x_out, y_out, u, v, fu, fv, acc, w00, w01, w10, w11
    for i in range(h):
        y_out = i + 0.5
        for j in range(w):
            x_out = j + 0.5
            u = a * x_out + b * y_out + c - 0.5
            v = d * x_out + e * y_out + f - 0.5
            j0 = <Py_ssize_t>floor(u)
            i0 = <Py_ssize_t>floor(v)
            fu = u - j0
            fv = v - i0
            w00 = (1.0 - fv) * (1.0 - fu)
            w01 = (1.0 - fv) * fu
            w10 = fv * (1.0 - fu)
            w11 = fv * fu
            acc = 0.0
            if 0 <= i0 < h and 0 <= j0 < w:
                acc += w00 * s[i0, j0]
            if 0 <= i0 < h and 0 <= j0 + 1 < w:
                acc += w01 * s[i0, j0 + 1]
            if 0 <= i0 + 1 < h and 0 <= j0 < w:
                acc += w10 * s[i0 + 1, j0]
            if 0 <= i0 + 1 < h and 0 <= j0 + 1 < w:
                acc += w11 * s[i0 + 1, j0 + 1]
            out[i, j] = acc
    return out


def splat_gaussian_max(heat, Py_ssize_t cy, Py_ssize_t cx, Py_ssize_t radius, double sigma):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] m = heat
    cdef Py_ssize_t h = m.shape[0]
    cdef Py_ssize_t w = m.shape[1]
    if not (0 <= cy < h and 0 <= cx < w):
        raise ValueError(f"peak cell ({cy}, {cx}) outside {h}x{w} map")
    if radius <= 0 or sigma <= 0:
        if m[cy, cx] < 1.0:
            m[cy, cx] = 1.0
        return

    cdef Py_ssize_t top = max(0, cy - radius)
    cdef Py_ssize_t bottom = min(h, cy + radius + 1)
    cdef Py_ssize_t left = max(0, cx - radius)
    cdef Py_ssize_t right = min(w, cx + radius + 1)
    cdef double denom = 2.0 * sigma * sigma
    cdef Py_ssize_t i, j
    cdef double dy2, val
    for i in range(top, bottom):
        dy2 = <double>((i - cy) * (i - cy))
        for j in range(left, right):
            val = exp(-(dy2 + (j - cx) * (j - cx)) / denom)
            if val > m[i, j]:
                m[i, j] = val


def local_peak_mask(score):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] s = np.ascontiguousarray(score, dtype=np.float64)
    cdef Py_ssize_t h = s.shape[0]
    cdef Py_ssize_t w = s.shape[1]
    cdef cnp.ndarray[cnp.uint8_t, ndim=2, cast=True] out = np.zeros((h, w), dtype=bool)

    cdef Py_ssize_t i, j, ni, nj
    cdef double v
    cdef bint is_peak
    for i in range(h):
        for j in range(w):
            v = s[i, j]
            is_peak = True
            for ni in range(max(0, i - 1), min(h, i + 2)):
                for nj in range(max(0, j - 1), min(w, j + 2)):
                    if s[ni, nj] > v:
                        is_peak = False
                        break
                if not is_peak:
                    break
            out[i, j] = is_peak
    return out
