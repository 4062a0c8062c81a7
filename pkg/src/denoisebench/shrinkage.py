"""Wavelet-coefficient thresholding and the four shrinkage estimators.

Threshold selection rules: universal (VisuShrink), SURE-minimizing
(SureShrink, with the sparse-band fallback to the universal threshold),
Bayesian (BayesShrink) and the neighborhood shrink factor (NeighShrink).
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ThresholdRule",
    "BandStats",
    "apply_threshold",
    "visu_threshold",
    "sure_threshold",
    "bayes_threshold",
    "band_stats",
    "neigh_shrink",
]


@dataclass(frozen=True)
class ThresholdRule:
    """Kill-or-keep (hard) or kill-or-shrink (soft) rule at threshold `value`."""

    kind: str  # "hard" | "soft"
    value: float

    def __post_init__(self):
        if self.kind not in ("hard", "soft"):
            raise ValueError(f"unknown threshold kind {self.kind!r}")
        if self.value < 0:
            raise ValueError("threshold must be non-negative")


@dataclass(frozen=True)
class BandStats:
    """Noise/observed/signal standard deviations of one detail band."""

    sigma_n: float
    sigma_w: float
    sigma_s: float
    n: int


def apply_threshold(band, rule: ThresholdRule) -> np.ndarray:
    """Apply hard or soft thresholding elementwise.

    Coefficients with |x| strictly greater than the threshold survive; a
    coefficient exactly at the threshold is zeroed by both rules.
    """
    x = np.asarray(band, dtype=np.float64)
    t = rule.value
    if rule.kind == "hard":
        return np.where(np.abs(x) > t, x, 0.0)
    return np.sign(x) * np.maximum(np.abs(x) - t, 0.0)


def visu_threshold(sigma: float, n: int) -> float:
    """Universal threshold sigma * sqrt(2 ln n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if sigma < 0:
        raise ValueError("sigma must be non-negative")
    return sigma * math.sqrt(2.0 * math.log(n))


def _sure_risk_curve(absw_sorted: np.ndarray) -> np.ndarray:
    """SURE(t) for soft thresholding at each candidate t in {0} + sorted |w|.

    For unit-variance coefficients w: SURE(t) = n - 2 #{|w| <= t}
    + sum_i min(|w_i|, t)^2.  Evaluated with cumulative sums over the sorted
    magnitudes; candidate j (1-based into the sorted array) has
    sum min(|w|, t_j)^2 = cumsum(w^2)[j] + (n - j) t_j^2.
    """
    n = absw_sorted.size
    sq = absw_sorted**2
    cum = np.concatenate(([0.0], np.cumsum(sq)))
    t = np.concatenate(([0.0], absw_sorted))
    below = np.concatenate(([0], np.searchsorted(absw_sorted, t[1:], side="right")))
    penalty = cum[below] + (n - below) * t**2
    return n - 2.0 * below + penalty


def sure_threshold(band, sigma: float) -> float:
    """SureShrink threshold for soft thresholding.

    Minimizes Stein's unbiased risk estimate over the candidate set
    {0} + {|w_i|} of sigma-normalized coefficients, capped at the universal
    threshold.  On sparse bands (second-moment statistic below the
    (log2 n)^1.5 / sqrt(n) cutoff) the universal threshold is used directly.
    """
    x = np.asarray(band, dtype=np.float64).ravel()
    if x.size == 0:
        raise ValueError("band must be non-empty")
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    n = x.size
    w = x / sigma
    universal = math.sqrt(2.0 * math.log(n))
    sparsity = (np.sum(w**2) - n) / n
    if sparsity <= math.log2(n) ** 1.5 / math.sqrt(n):
        return sigma * universal
    absw = np.sort(np.abs(w))
    risk = _sure_risk_curve(absw)
    candidates = np.concatenate(([0.0], absw))
    t_min = candidates[int(np.argmin(risk))]
    return sigma * min(t_min, universal)


def band_stats(band, sigma_n: float) -> BandStats:
    """Observed and signal std of a zero-mean detail band.

    The observed variance is the uncentered second moment; the signal std
    is sqrt(max(sigma_w^2 - sigma_n^2, 0)).
    """
    x = np.asarray(band, dtype=np.float64)
    if x.size == 0:
        raise ValueError("band must be non-empty")
    if sigma_n < 0:
        raise ValueError("sigma_n must be non-negative")
    var_w = float(np.mean(x**2))
    sigma_s = math.sqrt(max(var_w - sigma_n**2, 0.0))
    return BandStats(sigma_n=sigma_n, sigma_w=math.sqrt(var_w), sigma_s=sigma_s, n=x.size)


def bayes_threshold(stats: BandStats, squared_signal_denominator: bool = False) -> float:
    """BayesShrink threshold sigma_n^2 / sigma_s.

    When the signal std is zero the band carries no signal; a sentinel equal
    to +inf is returned so soft thresholding zeroes the whole band.

    `squared_signal_denominator` selects the sigma_n^2 / sigma_s^2 variant
    (dimensionally inconsistent; kept for comparison runs only).
    """
    if stats.sigma_n == 0:
        return 0.0
    if stats.sigma_s == 0:
        return math.inf
    denom = stats.sigma_s**2 if squared_signal_denominator else stats.sigma_s
    return stats.sigma_n**2 / denom


def neigh_shrink(band, t_universal: float, window: int = 3) -> np.ndarray:
    """NeighShrink: shrink each coefficient by its neighborhood energy.

    S2_ij = sum of squared coefficients in the window x window neighborhood
    (reflect-101 at borders); the output is max(1 - T_u^2 / S2_ij, 0) * Y_ij.
    """
    y = np.asarray(band, dtype=np.float64)
    if window < 1 or window % 2 == 0:
        raise ValueError(f"window must be odd and positive, got {window}")
    if t_universal < 0:
        raise ValueError("t_universal must be non-negative")
    if t_universal == 0:
        return y.copy()
    half = window // 2
    padded = np.pad(y**2, half, mode="reflect")
    s2 = np.zeros_like(y)
    for dy in range(window):
        for dx in range(window):
            s2 += padded[dy : dy + y.shape[0], dx : dx + y.shape[1]]
    factor = np.zeros_like(y)
    np.divide(t_universal**2, s2, out=factor, where=s2 > 0)
    return np.maximum(1.0 - factor, 0.0) * y
