"""RGB conversions feeding the statistics pipeline.

All outputs are real-valued float64 planes; nothing is re-quantized to
8 bits (quantization would bias kurtosis and divergence measurements).
Inputs are treated as stored display values in [0, 255] with no
linearization; the working input scale is recorded in every report.
"""

import numpy as np

from .errors import ZeroMeanImage

# Rec.601 luma weights
LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114])

# Gaussian opponent color transform, rows applied to (R, G, B)
GAUSSIAN_COLOR_MATRIX = np.array(
    [
        [0.06, 0.63, 0.27],
        [0.30, 0.04, 0.35],
        [0.34, 0.60, 0.17],
    ]
)


def to_luma(img: np.ndarray) -> np.ndarray:
    """Per-pixel Rec.601 weighted sum, kept real-valued. (H, W, 3) -> (H, W)."""
    return np.asarray(img, dtype=np.float64) @ LUMA_WEIGHTS


def normalize_luminance(gray: np.ndarray) -> np.ndarray:
    """Divide each pixel by the image's mean luminance; output mean is 1."""
    mean = float(gray.mean())
    if mean <= 0.0:
        raise ZeroMeanImage("cannot normalize an all-black image")
    return gray / mean


def to_gaussian_color(img: np.ndarray) -> np.ndarray:
    """Opponent color planes (E1, E2, E3) as an (H, W, 3) float array."""
    return np.asarray(img, dtype=np.float64) @ GAUSSIAN_COLOR_MATRIX.T
