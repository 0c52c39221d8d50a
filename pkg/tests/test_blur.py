from __future__ import annotations

import math

import numpy as np
import pytest

from rotoblur._accel import NUMBA_ENABLED
from rotoblur._conv import direct_blur_2d_array, separable_blur_array
from rotoblur.blur import ImageBuffer, blur, blur_reference_2d, make_kernel
from rotoblur.errors import EmptyImage, NegativeSigma, NonFiniteSigma


def random_image(rng: np.random.Generator, h: int = 32, w: int = 32, channels: int = 1) -> ImageBuffer:
    return ImageBuffer.from_array(rng.random((h, w, channels)))


def test_sigma_zero_is_identity_kernel():
    k = make_kernel(0.0)
    assert k.radius == 0
    assert k.weights.tolist() == [1.0]


def test_sigma_below_epsilon_is_identity_kernel():
    assert make_kernel(5e-7).radius == 0


def test_sigma_one_matches_pointwise_evaluation():
    # direct oracle: exp(-x^2/2) at x in -3..3, normalized
    raw = [math.exp(-(x * x) / 2.0) for x in range(-3, 4)]
    total = sum(raw)
    expected = [value / total for value in raw]
    k = make_kernel(1.0, truncation=3.0)
    assert k.radius == 3
    assert len(k.weights) == 7
    np.testing.assert_allclose(k.weights, expected, rtol=0, atol=1e-15)


def test_kernels_normalized_symmetric_nonnegative():
    rng = np.random.default_rng(3)
    for _ in range(50):
        sigma = float(rng.uniform(1e-3, 10.0))
        k = make_kernel(sigma)
        assert abs(float(k.weights.sum()) - 1.0) <= 1e-12
        assert np.array_equal(k.weights, k.weights[::-1])
        assert np.all(k.weights >= 0.0)


def test_kernel_radius_follows_truncation():
    assert make_kernel(2.0, truncation=3.0).radius == 6
    assert make_kernel(1.5, truncation=2.0).radius == 3


def test_bad_sigma_rejected():
    with pytest.raises(NegativeSigma):
        make_kernel(-0.1)
    with pytest.raises(NonFiniteSigma):
        make_kernel(math.nan)
    with pytest.raises(NonFiniteSigma):
        make_kernel(math.inf)
    with pytest.raises(ValueError):
        make_kernel(1.0, truncation=0.0)


def test_identity_kernel_returns_input_bit_exactly():
    rng = np.random.default_rng(4)
    img = random_image(rng, channels=3)
    out = blur(img, make_kernel(0.0))
    assert np.array_equal(out.data, img.data)
    assert out.data is not img.data


def test_constant_image_is_unchanged():
    for value in (0.0, 0.25, 1.0):
        img = ImageBuffer.from_array(np.full((16, 12, 3), value))
        out = blur(img, make_kernel(2.5))
        np.testing.assert_allclose(out.data, img.data, rtol=0, atol=1e-14)


def test_impulse_response_is_outer_product():
    img_data = np.zeros((9, 9, 1))
    img_data[4, 4, 0] = 1.0
    k = make_kernel(1.0)
    out = blur(ImageBuffer.from_array(img_data), k).data[:, :, 0]
    expected = np.zeros((9, 9))
    expected[4 - k.radius:4 + k.radius + 1, 4 - k.radius:4 + k.radius + 1] = np.outer(k.weights, k.weights)
    assert np.array_equal(out, expected)


def test_separable_matches_2d_reference():
    rng = np.random.default_rng(5)
    for trial in range(100):
        channels = 3 if trial % 4 == 0 else 1
        img = random_image(rng, channels=channels)
        sigma = float(rng.uniform(0.2, 5.0))
        a = blur(img, make_kernel(sigma))
        b = blur_reference_2d(img, sigma)
        rms = float(np.sqrt(np.mean((a.data - b.data) ** 2)))
        assert rms <= 1e-6


def test_reference_2d_identity_and_constant():
    rng = np.random.default_rng(6)
    img = random_image(rng)
    out = blur_reference_2d(img, 0.0)
    assert np.array_equal(out.data, img.data)
    const = ImageBuffer.from_array(np.full((8, 8, 1), 0.5))
    np.testing.assert_allclose(blur_reference_2d(const, 1.5).data, const.data, rtol=0, atol=1e-14)


def test_mean_preserved_on_edge_padded_images():
    rng = np.random.default_rng(8)
    for _ in range(20):
        sigma = float(rng.uniform(0.5, 3.0))
        k = make_kernel(sigma)
        core = rng.random((24, 20, 1))
        padded = np.pad(core, ((k.radius, k.radius), (k.radius, k.radius), (0, 0)), mode="edge")
        img = ImageBuffer.from_array(padded)
        out = blur(img, k)
        assert abs(float(out.data.mean()) - float(img.data.mean())) <= 1e-9


def _total_variation(data: np.ndarray) -> float:
    return float(np.abs(np.diff(data, axis=0)).sum() + np.abs(np.diff(data, axis=1)).sum())


def test_total_variation_never_increases():
    rng = np.random.default_rng(9)
    for _ in range(20):
        img = random_image(rng, h=24, w=24)
        sigma = float(rng.uniform(0.3, 4.0))
        before = _total_variation(img.data)
        after = _total_variation(blur(img, make_kernel(sigma)).data)
        assert after <= before + 1e-12


def test_empty_image_rejected():
    empty = ImageBuffer(width=0, height=0, channels=1, data=np.zeros((0, 0, 1)))
    with pytest.raises(EmptyImage):
        blur(empty, make_kernel(1.0))
    with pytest.raises(EmptyImage):
        blur_reference_2d(empty, 1.0)


def test_output_stays_in_unit_range():
    rng = np.random.default_rng(10)
    img = random_image(rng, channels=3)
    out = blur(img, make_kernel(3.0))
    assert float(out.data.min()) >= 0.0
    assert float(out.data.max()) <= 1.0


@pytest.mark.skipif(not NUMBA_ENABLED, reason="numba backend not available")
def test_numba_and_numpy_backends_bit_identical():
    rng = np.random.default_rng(12)
    for _ in range(10):
        arr = rng.random((21, 17, 3))
        weights = make_kernel(float(rng.uniform(0.3, 3.0))).weights
        assert np.array_equal(
            separable_blur_array(arr, weights, backend="numba"),
            separable_blur_array(arr, weights, backend="numpy"),
        )
        assert np.array_equal(
            direct_blur_2d_array(arr, weights, backend="numba"),
            direct_blur_2d_array(arr, weights, backend="numpy"),
        )
