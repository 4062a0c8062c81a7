"""Image-quality metrics: MSE, RMSE, MAE, PSNR and the universal quality index."""

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["MetricsReport", "mse_rmse_mae", "psnr", "uqi", "evaluate", "PEAK"]

PEAK = 255.0


@dataclass(frozen=True)
class MetricsReport:
    mse: float
    rmse: float
    mae: float
    psnr_db: float  # math.inf when mse == 0
    uqi: float


def _check_pair(reference, test) -> tuple[np.ndarray, np.ndarray]:
    ref = np.asarray(reference, dtype=np.float64)
    tst = np.asarray(test, dtype=np.float64)
    if ref.shape != tst.shape:
        raise ValueError(f"shape mismatch: {ref.shape} vs {tst.shape}")
    return ref, tst


def mse_rmse_mae(reference, test) -> tuple[float, float, float]:
    """Pixel-averaged squared error, its root, and absolute error."""
    ref, tst = _check_pair(reference, test)
    diff = tst - ref
    mse = float(np.mean(diff**2))
    mae = float(np.mean(np.abs(diff)))
    return mse, math.sqrt(mse), mae


def psnr(reference, test, clamp: bool = True) -> float:
    """Peak signal-to-noise ratio in dB against a peak of 255.

    Both images are clamped to [0, 255] first (the displayable image) unless
    `clamp` is False.  Returns +inf for identical images.
    """
    ref, tst = _check_pair(reference, test)
    if clamp:
        ref = np.clip(ref, 0.0, PEAK)
        tst = np.clip(tst, 0.0, PEAK)
    mse = float(np.mean((tst - ref) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(PEAK**2 / mse)


def uqi(reference, test) -> float:
    """Universal quality index over a single global window.

    Product of correlation, luminance-distortion and contrast-distortion
    factors; variances and covariance use the (MN - 1) denominator.
    Degenerate cases: two identical constant images score 1; a single zero
    variance or a zero mean-square denominator scores 0.
    """
    ref, tst = _check_pair(reference, test)
    if ref.size < 2:
        raise ValueError("uqi needs at least 2 pixels")
    f = ref.ravel()
    g = tst.ravel()
    mf, mg = float(np.mean(f)), float(np.mean(g))
    n1 = f.size - 1
    var_f = float(np.sum((f - mf) ** 2)) / n1
    var_g = float(np.sum((g - mg) ** 2)) / n1
    cov = float(np.sum((f - mf) * (g - mg))) / n1
    if var_f == 0.0 and var_g == 0.0:
        return 1.0 if np.array_equal(f, g) else 0.0
    if var_f == 0.0 or var_g == 0.0 or (mf == 0.0 and mg == 0.0):
        return 0.0
    # grouped as (4 cov mf mg) / ((var_f + var_g)(mf^2 + mg^2)): the usual
    # correlation/luminance/contrast factors with the sigma_f*sigma_g terms
    # cancelled, avoiding a spurious 0/0 when the images are uncorrelated
    return 4.0 * cov * mf * mg / ((var_f + var_g) * (mf**2 + mg**2))


def evaluate(reference, test, clamp: bool = True) -> MetricsReport:
    """All metrics of `test` against `reference`.

    With `clamp` (the default) the test image is clamped to [0, 255] before
    scoring, matching what a viewer of the saved image would see.
    """
    ref, tst = _check_pair(reference, test)
    if clamp:
        tst = np.clip(tst, 0.0, PEAK)
    mse, rmse, mae = mse_rmse_mae(ref, tst)
    return MetricsReport(
        mse=mse,
        rmse=rmse,
        mae=mae,
        psnr_db=psnr(ref, tst, clamp=False),
        uqi=uqi(ref, tst),
    )
