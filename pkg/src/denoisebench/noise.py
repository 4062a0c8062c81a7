"""Seedable Gaussian noise injection and MAD noise-level estimation.

Reproducibility contract
------------------------
Noise fields are generated by a counter-based SplitMix64 stream (Steele,
Lea & Flood 2014) feeding a Box-Muller transform:

* 64-bit output i: ``z = seed + (i + 1) * 0x9E3779B97F4A7C15`` (mod 2^64),
  then the SplitMix64 finalizer
  ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
  z *= 0x94D049BB133111EB; z ^= z >> 31``.
* uniform i in (0, 1): ``((output_i >> 11) + 0.5) * 2**-53``.
* Gaussian pair k (from uniforms 2k, 2k+1):
  ``r = sqrt(-2 ln u_{2k})``; ``z_{2k} = r cos(2 pi u_{2k+1})``,
  ``z_{2k+1} = r sin(2 pi u_{2k+1})``.
* Deviates fill the image in row-major pixel order.

Every step is a pure function of (seed, index), so the same (image shape,
sigma, seed) always reproduces the identical noise field, in any language.
"""

from dataclasses import dataclass

import numpy as np

from denoisebench.imagecore import as_image

__all__ = [
    "NoiseModel",
    "splitmix64_stream",
    "gaussian_field",
    "add_awgn",
    "estimate_noise_mad",
    "MAD_GAUSSIAN_CONSISTENCY",
]

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)

# Standard Gaussian consistency constant for the median absolute deviation
# (Phi^{-1}(3/4)).  Kept as a named constant so alternative conventions can
# be swapped in one place.
MAD_GAUSSIAN_CONSISTENCY = 0.6745


@dataclass(frozen=True)
class NoiseModel:
    """Additive white Gaussian noise: standard deviation plus stream seed."""

    sigma: float
    seed: int

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def splitmix64_stream(seed: int, count: int) -> np.ndarray:
    """First `count` outputs of the SplitMix64 stream for `seed`, as uint64."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed) + idx * _GOLDEN
        z ^= z >> np.uint64(30)
        z *= np.uint64(0xBF58476D1CE4E5B9)
        z ^= z >> np.uint64(27)
        z *= np.uint64(0x94D049BB133111EB)
        z ^= z >> np.uint64(31)
    return z


def gaussian_field(seed: int, shape: tuple[int, int]) -> np.ndarray:
    """Standard-normal field of the given shape, filled in row-major order."""
    n = int(np.prod(shape))
    pairs = (n + 1) // 2
    bits = splitmix64_stream(seed, 2 * pairs)
    u = ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53
    u1, u2 = u[0::2], u[1::2]
    r = np.sqrt(-2.0 * np.log(u1))
    theta = 2.0 * np.pi * u2
    z = np.empty(2 * pairs)
    z[0::2] = r * np.cos(theta)
    z[1::2] = r * np.sin(theta)
    return z[:n].reshape(shape)


def add_awgn(image, model: NoiseModel) -> np.ndarray:
    """Add i.i.d. N(0, sigma^2) noise per pixel.  Output is not clamped."""
    img = as_image(image)
    return img + model.sigma * gaussian_field(model.seed, img.shape)


def estimate_noise_mad(finest_hh) -> float:
    """Noise std estimate: median(|coefficients|) / 0.6745.

    Applied to the finest diagonal detail band of an orthonormal wavelet
    decomposition, where noise dominates the coefficients.
    """
    coeffs = np.asarray(finest_hh, dtype=np.float64)
    if coeffs.size == 0:
        raise ValueError("cannot estimate noise from an empty coefficient grid")
    return float(np.median(np.abs(coeffs)) / MAD_GAUSSIAN_CONSISTENCY)
