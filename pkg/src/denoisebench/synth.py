"""Synthetic grayscale test images for self-contained benchmark runs.

The classic photographic test images are not redistributable, so the harness
ships a generator for deterministic stand-ins: a diagonal gradient, a
checkerboard and a textured-plateau image (the closest synthetic analogue
of natural image content: smooth regions, sharp edges, multi-scale detail).
"""

import numpy as np

from denoisebench.noise import gaussian_field

__all__ = ["gradient_image", "checkerboard_image", "texture_image", "default_set"]


def gradient_image(size: int = 128) -> np.ndarray:
    """Diagonal luminance ramp covering [0, 255]."""
    ramp = np.add.outer(np.arange(size), np.arange(size)).astype(np.float64)
    return ramp * (255.0 / ramp.max())


def checkerboard_image(size: int = 128, cell: int = 8, lo: float = 64.0, hi: float = 192.0) -> np.ndarray:
    """Square checkerboard with `cell`-pixel tiles."""
    yy, xx = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
    return np.where(((yy // cell) + (xx // cell)) % 2 == 0, lo, hi).astype(np.float64)


def _box_blur(field: np.ndarray, passes: int) -> np.ndarray:
    """Repeated periodic 3x3 box blur."""
    for _ in range(passes):
        acc = np.zeros_like(field)
        for dy in (-1, 0, 1):
            for dx in (-1, 0, 1):
                acc += np.roll(np.roll(field, dy, axis=0), dx, axis=1)
        field = acc / 9.0
    return field


def _octave_stack(size: int, seed: int, weights) -> np.ndarray:
    """Weighted sum of blurred white-noise fields at halving resolutions."""
    field = np.zeros((size, size))
    for k, weight in enumerate(weights):
        coarse = max(size >> k, 4)
        layer = _box_blur(gaussian_field(seed + k, (coarse, coarse)), passes=2)
        if coarse < size:
            layer = np.repeat(np.repeat(layer, size // coarse, axis=0), size // coarse, axis=1)
            layer = _box_blur(layer, passes=1)
        field += weight * layer
    return field


def _smooth_field(size: int, seed: int, k: int) -> np.ndarray:
    """A single heavily-blurred coarse octave, used to lay out regions."""
    coarse = max(size >> k, 4)
    layer = _box_blur(gaussian_field(seed, (coarse, coarse)), passes=2)
    layer = np.repeat(np.repeat(layer, size // coarse, axis=0), size // coarse, axis=1)
    return _box_blur(layer, passes=3)


def texture_image(
    size: int = 256,
    seed: int = 0x5EED,
    weights: tuple[float, ...] = (0.5, 1.5, 4.0, 10.0, 20.0),
    edge_strength: float = 3.0,
    regions: int = 6,
) -> np.ndarray:
    """Natural-content stand-in: textured plateaus, rescaled to [16, 240].

    Two ingredients: a multi-octave smoothed-noise texture (`weights`, finest
    octave first, coarse octaves dominating) and a piecewise-constant region
    map with sharp boundaries, built by rank-quantising a smooth random field
    into `regions` luminance plateaus.  The texture is normalised to unit
    standard deviation, so `edge_strength` sets the step height between
    adjacent plateaus in texture-sigma units.  The mix gives smooth areas,
    strong edges and fine detail at several scales, the structures that
    differentiate edge-preserving denoisers.
    """
    texture = _octave_stack(size, seed, weights)
    texture /= texture.std()
    layout = _smooth_field(size, seed + 50, 5) + 0.5 * _smooth_field(size, seed + 51, 4)
    ranks = layout.argsort(axis=None).argsort().reshape(layout.shape) / layout.size
    plateaus = np.floor(ranks * regions) / (regions - 1) - 0.5  # in [-0.5, 0.5]
    field = texture + edge_strength * plateaus * 6.0
    lo, hi = field.min(), field.max()
    return 16.0 + (field - lo) * (224.0 / (hi - lo))


def default_set() -> dict[str, np.ndarray]:
    """The CI-sized synthetic set used by the default benchmark grid."""
    return {
        "gradient128": gradient_image(128),
        "checker128": checkerboard_image(128),
        "texture256": texture_image(256),
    }
