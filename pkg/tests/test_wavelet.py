"""Orthonormal Haar transform: hand values, round trips, energy conservation."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from denoisebench.wavelet import (
    Pyramid,
    SubBands,
    decompose,
    dwt2_haar,
    idwt2_haar,
    reconstruct,
)


def test_dwt_hand_example():
    bands = dwt2_haar(np.array([[1.0, 2.0], [3.0, 4.0]]))
    assert bands.ll[0, 0] == 5.0
    assert bands.hl[0, 0] == -1.0
    assert bands.lh[0, 0] == -2.0
    assert bands.hh[0, 0] == 0.0  # (1 - 2 - 3 + 4) / 2


def test_idwt_hand_example():
    bands = SubBands(
        ll=np.array([[5.0]]), lh=np.array([[-2.0]]),
        hl=np.array([[-1.0]]), hh=np.array([[0.0]]),
    )
    np.testing.assert_allclose(idwt2_haar(bands), [[1.0, 2.0], [3.0, 4.0]])


def test_dwt_constant_image():
    bands = dwt2_haar(np.full((8, 8), 7.0))
    np.testing.assert_allclose(bands.ll, 14.0)
    assert not bands.lh.any() and not bands.hl.any() and not bands.hh.any()


def test_dwt_rejects_odd_dimensions():
    with pytest.raises(ValueError):
        dwt2_haar(np.zeros((3, 2)))


def test_subbands_rejects_mismatched_shapes():
    with pytest.raises(ValueError):
        SubBands(np.zeros((2, 2)), np.zeros((2, 2)), np.zeros((2, 2)), np.zeros((1, 1)))


def test_zeroed_details_reconstruct_block_mean():
    pyramid = decompose(np.array([[1.0, 2.0], [3.0, 4.0]]), levels=1)
    zero = np.zeros((1, 1))
    stripped = Pyramid(
        (SubBands(pyramid.levels[0].ll, zero, zero, zero),),
        pyramid.top_ll,
        (2, 2),
    )
    np.testing.assert_allclose(reconstruct(stripped), 2.5)


def test_decompose_shapes_and_constant_scaling():
    img = np.full((512, 512), 3.0)
    one = decompose(img, 1)
    assert len(one.levels) == 1
    assert one.top_ll.shape == (256, 256)
    assert one.levels[0].hh.shape == (256, 256)
    three = decompose(img, 3)
    np.testing.assert_allclose(three.top_ll, 3.0 * 2**3)
    for bands in three.levels:
        assert not bands.hh.any()


def test_decompose_divisibility_precondition():
    with pytest.raises(ValueError):
        decompose(np.zeros((100, 100)), levels=3)


def test_pyramid_tampered_top_ll_rejected():
    pyramid = decompose(np.random.default_rng(0).normal(size=(16, 16)), 2)
    with pytest.raises(ValueError):
        Pyramid(pyramid.levels, np.zeros((8, 8)), (16, 16))


@pytest.mark.parametrize("size,levels", [(64, 1), (64, 2), (128, 3), (512, 4)])
def test_round_trip_and_energy(size, levels):
    rng = np.random.default_rng(size + levels)
    img = rng.uniform(0.0, 255.0, (size, size))
    pyramid = decompose(img, levels)
    assert np.max(np.abs(reconstruct(pyramid) - img)) < 1e-9
    # orthonormality: total coefficient energy equals image energy per level
    energy = float(np.sum(img**2))
    current = img
    for bands in pyramid.levels:
        level_energy = sum(
            float(np.sum(b**2)) for b in (bands.ll, bands.lh, bands.hl, bands.hh)
        )
        assert abs(level_energy - float(np.sum(current**2))) <= 1e-12 * energy
        current = bands.ll


@settings(max_examples=30, deadline=None)
@given(
    arrays(np.float64, (8, 8), elements=st.floats(-1e3, 1e3)),
    st.integers(1, 3),
)
def test_round_trip_property(img, levels):
    np.testing.assert_allclose(
        reconstruct(decompose(img, levels)), img, atol=1e-9, rtol=0
    )


@given(arrays(np.float64, (6, 4), elements=st.floats(-100, 100)))
def test_single_level_linearity(img):
    a = dwt2_haar(img)
    b = dwt2_haar(2.0 * img)
    np.testing.assert_allclose(b.ll, 2.0 * a.ll, atol=1e-12)
    np.testing.assert_allclose(b.hh, 2.0 * a.hh, atol=1e-12)
