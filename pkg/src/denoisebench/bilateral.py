"""Edge-preserving bilateral filter.

Each output pixel is the normalized weighted sum of its window neighborhood,
with Gaussian weights on squared Euclidean pixel distance (sigma_d) and on
intensity difference (sigma_r).  Borders use reflect-101 mirroring.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["BilateralParams", "bilateral_filter"]


@dataclass(frozen=True)
class BilateralParams:
    """Spatial fall-off (pixels), range fall-off (luminance), window side."""

    sigma_d: float = 1.8
    sigma_r: float = 20.0
    window: int = 11

    def __post_init__(self):
        if not self.sigma_d > 0 or not self.sigma_r > 0:
            raise ValueError("sigma_d and sigma_r must be positive")
        if self.window < 1 or self.window % 2 == 0:
            raise ValueError(f"window must be odd and positive, got {self.window}")


def bilateral_filter(image, params: BilateralParams) -> np.ndarray:
    """Filter a grayscale image; output stays within the local window range."""
    img = np.asarray(image, dtype=np.float64)
    h, w = img.shape
    if params.window > 2 * min(h, w) - 1:
        raise ValueError(f"window {params.window} too large for image shape {img.shape}")
    half = params.window // 2
    padded = np.pad(img, half, mode="reflect")
    inv_2sd2 = 1.0 / (2.0 * params.sigma_d**2)
    inv_2sr2 = 1.0 / (2.0 * params.sigma_r**2)
    num = np.zeros_like(img)
    den = np.zeros_like(img)
    # accumulate one shifted copy of the image per window offset
    for dy in range(-half, half + 1):
        for dx in range(-half, half + 1):
            shifted = padded[half + dy : half + dy + h, half + dx : half + dx + w]
            weight = np.exp(
                -(dy * dy + dx * dx) * inv_2sd2 - (shifted - img) ** 2 * inv_2sr2
            )
            num += weight * shifted
            den += weight
    return num / den
