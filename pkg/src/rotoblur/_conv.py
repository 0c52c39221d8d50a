"""Hot convolution kernels: numba-compiled loops with a numpy fallback.

Both backends accumulate taps in the same order, so their outputs are
bit-identical; golden files do not depend on which one is active.
Arrays are float64 with shape (height, width, channels); padding is
clamp-to-edge and done by the callers via np.pad(..., mode="edge").
"""
from __future__ import annotations

import numpy as np

from ._accel import NUMBA_ENABLED, njit


@njit(cache=True)
def _conv_axis0_jit(padded: np.ndarray, weights: np.ndarray, out: np.ndarray) -> None:
    taps = weights.shape[0]
    h, w, c = out.shape
    for y in range(h):
        for x in range(w):
            for ch in range(c):
                acc = 0.0
                for i in range(taps):
                    acc += weights[i] * padded[y + i, x, ch]
                out[y, x, ch] = acc


@njit(cache=True)
def _conv_axis1_jit(padded: np.ndarray, weights: np.ndarray, out: np.ndarray) -> None:
    taps = weights.shape[0]
    h, w, c = out.shape
    for y in range(h):
        for x in range(w):
            for ch in range(c):
                acc = 0.0
                for i in range(taps):
                    acc += weights[i] * padded[y, x + i, ch]
                out[y, x, ch] = acc


@njit(cache=True)
def _conv2d_jit(padded: np.ndarray, weights: np.ndarray, out: np.ndarray) -> None:
    taps = weights.shape[0]
    h, w, c = out.shape
    for y in range(h):
        for x in range(w):
            for ch in range(c):
                acc = 0.0
                for i in range(taps):
                    for j in range(taps):
                        acc += weights[i] * weights[j] * padded[y + i, x + j, ch]
                out[y, x, ch] = acc


def _conv_axis0_np(padded: np.ndarray, weights: np.ndarray, out: np.ndarray) -> None:
    h = out.shape[0]
    out[:] = weights[0] * padded[0:h]
    for i in range(1, weights.shape[0]):
        out += weights[i] * padded[i:i + h]


def _conv_axis1_np(padded: np.ndarray, weights: np.ndarray, out: np.ndarray) -> None:
    w = out.shape[1]
    out[:] = weights[0] * padded[:, 0:w]
    for i in range(1, weights.shape[0]):
        out += weights[i] * padded[:, i:i + w]


def _conv2d_np(padded: np.ndarray, weights: np.ndarray, out: np.ndarray) -> None:
    h, w = out.shape[0], out.shape[1]
    taps = weights.shape[0]
    out[:] = (weights[0] * weights[0]) * padded[0:h, 0:w]
    first = True
    for i in range(taps):
        for j in range(taps):
            if first:
                first = False
                continue
            out += (weights[i] * weights[j]) * padded[i:i + h, j:j + w]


def _resolve(backend: str | None) -> str:
    if backend is None:
        return "numba" if NUMBA_ENABLED else "numpy"
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend: {backend!r}")
    if backend == "numba" and not NUMBA_ENABLED:
        raise RuntimeError("numba backend requested but numba is disabled or missing")
    return backend


def active_backend() -> str:
    return _resolve(None)


def separable_blur_array(arr: np.ndarray, weights: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Horizontal-then-vertical pass of a symmetric 1D kernel, clamp-to-edge."""
    backend = _resolve(backend)
    radius = (weights.shape[0] - 1) // 2
    if radius == 0:
        return arr.copy()
    mid = np.empty_like(arr)
    out = np.empty_like(arr)
    padded_x = np.pad(arr, ((0, 0), (radius, radius), (0, 0)), mode="edge")
    if backend == "numba":
        _conv_axis1_jit(padded_x, weights, mid)
    else:
        _conv_axis1_np(padded_x, weights, mid)
    padded_y = np.pad(mid, ((radius, radius), (0, 0), (0, 0)), mode="edge")
    if backend == "numba":
        _conv_axis0_jit(padded_y, weights, out)
    else:
        _conv_axis0_np(padded_y, weights, out)
    return out


def direct_blur_2d_array(arr: np.ndarray, weights: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Single-pass convolution with the full outer-product kernel, clamp-to-edge.

    O(radius^2) per pixel; kept as the independent reference for the
    separable implementation.
    """
    backend = _resolve(backend)
    radius = (weights.shape[0] - 1) // 2
    if radius == 0:
        return arr.copy()
    out = np.empty_like(arr)
    padded = np.pad(arr, ((radius, radius), (radius, radius), (0, 0)), mode="edge")
    if backend == "numba":
        _conv2d_jit(padded, weights, out)
    else:
        _conv2d_np(padded, weights, out)
    return out
