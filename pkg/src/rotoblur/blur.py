"""Gaussian kernels and uniform full-frame blur.

The blur is separable: one horizontal and one vertical pass with the same
normalized 1D kernel, clamp-to-edge at the borders.  `blur_reference_2d`
convolves with the full 2D kernel instead and exists to cross-check the
separable path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._conv import direct_blur_2d_array, separable_blur_array
from .errors import EmptyImage, NegativeSigma, NonFiniteSigma

SIGMA_IDENTITY_EPS = 1e-6
DEFAULT_TRUNCATION = 3.0


@dataclass(frozen=True)
class Kernel1D:
    """Normalized symmetric Gaussian taps: weights has length 2*radius + 1."""

    radius: int
    weights: np.ndarray

    def __post_init__(self):
        if self.weights.shape != (2 * self.radius + 1,):
            raise ValueError("weights length must be 2*radius + 1")


@dataclass(frozen=True)
class ImageBuffer:
    """Row-major float image in [0, 1], 1 (gray) or 3 (RGB) channels.

    `data` has shape (height, width, channels), dtype float64.
    """

    width: int
    height: int
    channels: int
    data: np.ndarray

    def __post_init__(self):
        if self.channels not in (1, 3):
            raise ValueError("channels must be 1 or 3")
        if self.data.shape != (self.height, self.width, self.channels):
            raise ValueError("data shape must be (height, width, channels)")
        if self.data.dtype != np.float64:
            raise ValueError("data must be float64")

    @classmethod
    def from_array(cls, data: np.ndarray) -> "ImageBuffer":
        arr = np.asarray(data, dtype=np.float64)
        if arr.ndim == 2:
            arr = arr[:, :, np.newaxis]
        h, w, c = arr.shape
        return cls(width=w, height=h, channels=c, data=arr)


def make_kernel(sigma_px: float, truncation: float = DEFAULT_TRUNCATION) -> Kernel1D:
    """Build a normalized Gaussian kernel with radius ceil(truncation * sigma).

    Sigma below 1e-6 collapses to the identity kernel (radius 0, weight 1).
    """
    sigma_px = float(sigma_px)
    if math.isnan(sigma_px) or math.isinf(sigma_px):
        raise NonFiniteSigma(f"sigma must be finite, got {sigma_px}")
    if sigma_px < 0.0:
        raise NegativeSigma(f"sigma must be >= 0, got {sigma_px}")
    truncation = float(truncation)
    if not math.isfinite(truncation) or truncation <= 0.0:
        raise ValueError(f"truncation must be positive and finite, got {truncation}")
    if sigma_px < SIGMA_IDENTITY_EPS:
        return Kernel1D(radius=0, weights=np.ones(1, dtype=np.float64))
    radius = int(math.ceil(truncation * sigma_px))
    offsets = np.arange(-radius, radius + 1, dtype=np.float64)
    weights = np.exp(-(offsets * offsets) / (2.0 * sigma_px * sigma_px))
    weights /= weights.sum()
    return Kernel1D(radius=radius, weights=weights)


def _require_nonempty(img: ImageBuffer) -> None:
    if img.width == 0 or img.height == 0:
        raise EmptyImage("image has no pixels")


def blur(img: ImageBuffer, kernel: Kernel1D, backend: str | None = None) -> ImageBuffer:
    """Separable Gaussian blur; identity kernel returns the input bit-exactly."""
    _require_nonempty(img)
    out = separable_blur_array(img.data, kernel.weights, backend=backend)
    if kernel.radius > 0:
        np.clip(out, 0.0, 1.0, out=out)
    return ImageBuffer(width=img.width, height=img.height, channels=img.channels, data=out)


def blur_reference_2d(
    img: ImageBuffer,
    sigma_px: float,
    truncation: float = DEFAULT_TRUNCATION,
    backend: str | None = None,
) -> ImageBuffer:
    """Direct 2D-kernel blur used as the oracle for the separable path."""
    _require_nonempty(img)
    kernel = make_kernel(sigma_px, truncation)
    out = direct_blur_2d_array(img.data, kernel.weights, backend=backend)
    if kernel.radius > 0:
        np.clip(out, 0.0, 1.0, out=out)
    return ImageBuffer(width=img.width, height=img.height, channels=img.channels, data=out)
