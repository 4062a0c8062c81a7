"""Bilateral filter: identities, Gaussian-blur limit, edge preservation."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from denoisebench.bilateral import BilateralParams, bilateral_filter


def _gaussian_blur_oracle(img, sigma_d, window):
    """Truncated Gaussian convolution over the same window, reflect-101."""
    half = window // 2
    padded = np.pad(img, half, mode="reflect")
    h, w = img.shape
    num = np.zeros_like(img)
    den = 0.0
    for dy in range(-half, half + 1):
        for dx in range(-half, half + 1):
            weight = np.exp(-(dy * dy + dx * dx) / (2.0 * sigma_d**2))
            num += weight * padded[half + dy : half + dy + h, half + dx : half + dx + w]
            den += weight
    return num / den


def _bilateral_oracle(img, params):
    """Direct per-pixel double loop over the window."""
    half = params.window // 2
    padded = np.pad(img, half, mode="reflect")
    h, w = img.shape
    out = np.zeros_like(img)
    for i in range(h):
        for j in range(w):
            num = den = 0.0
            for dy in range(-half, half + 1):
                for dx in range(-half, half + 1):
                    v = padded[half + i + dy, half + j + dx]
                    weight = np.exp(
                        -(dy * dy + dx * dx) / (2.0 * params.sigma_d**2)
                        - (v - img[i, j]) ** 2 / (2.0 * params.sigma_r**2)
                    )
                    num += weight * v
                    den += weight
            out[i, j] = num / den
    return out


def test_params_validation():
    with pytest.raises(ValueError):
        BilateralParams(sigma_d=0.0)
    with pytest.raises(ValueError):
        BilateralParams(sigma_r=-1.0)
    with pytest.raises(ValueError):
        BilateralParams(window=4)


def test_window_too_large_rejected():
    with pytest.raises(ValueError):
        bilateral_filter(np.zeros((4, 4)), BilateralParams(window=11))


def test_constant_image_unchanged():
    img = np.full((16, 16), 42.0)
    out = bilateral_filter(img, BilateralParams())
    np.testing.assert_allclose(out, 42.0, atol=1e-12)


def test_huge_sigma_r_matches_gaussian_blur():
    rng = np.random.default_rng(12)
    img = rng.uniform(0.0, 255.0, (24, 24))
    params = BilateralParams(sigma_d=1.8, sigma_r=1e9, window=11)
    got = bilateral_filter(img, params)
    want = _gaussian_blur_oracle(img, 1.8, 11)
    np.testing.assert_allclose(got, want, atol=1e-9)


def test_step_edge_preserved():
    img = np.zeros((16, 32))
    img[:, 16:] = 255.0
    out = bilateral_filter(img, BilateralParams(sigma_d=1.8, sigma_r=20.0, window=11))
    # cross-edge weights are bounded by exp(-255^2 / (2 * 20^2)) < 1e-35
    assert np.max(np.abs(out[:, :16])) < 1.0
    assert np.max(np.abs(out[:, 16:] - 255.0)) < 1.0


def test_matches_double_loop_oracle():
    rng = np.random.default_rng(3)
    img = rng.uniform(0.0, 255.0, (10, 12))
    params = BilateralParams(sigma_d=1.5, sigma_r=25.0, window=5)
    np.testing.assert_allclose(
        bilateral_filter(img, params), _bilateral_oracle(img, params), atol=1e-12
    )


@settings(max_examples=25, deadline=None)
@given(arrays(np.float64, (8, 8), elements=st.floats(0, 255)))
def test_output_within_input_range(img):
    out = bilateral_filter(img, BilateralParams(window=7))
    assert out.min() >= img.min() - 1e-9
    assert out.max() <= img.max() + 1e-9


@settings(max_examples=25, deadline=None)
@given(arrays(np.float64, (8, 8), elements=st.floats(0, 255)), st.floats(1, 200))
def test_shift_equivariance(img, offset):
    # adding a constant commutes with the filter (weights depend on differences)
    params = BilateralParams(window=7)
    base = bilateral_filter(img, params)
    shifted = bilateral_filter(img + offset, params)
    np.testing.assert_allclose(shifted, base + offset, atol=1e-9)
