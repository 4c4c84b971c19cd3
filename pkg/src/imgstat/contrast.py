"""Gaussian-derivative local contrast and Weibull fitting.

Local contrast is the root-sum-of-squares of first-derivative-of-Gaussian
responses over the three opponent color planes. Contrast magnitudes of a
single image are then summarized by a two-parameter Weibull fit
(shape gamma, scale beta) plus the KL divergence between the empirical
contrast histogram and the fitted distribution.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage
from scipy.optimize import brentq

from .errors import (
    BadSigma,
    ImageSmallerThanKernel,
    NoConvergence,
    NoPositiveSamples,
)
from .moments import Histogram, build_histogram, kl_divergence


@dataclass(frozen=True)
class DerivativeKernelPair:
    """Sampled x/y derivative-of-Gaussian kernels on a square support.

    kx responds to horizontal gradients, ky = kx transposed. Both kernels
    are mean-subtracted so their sum is exactly zero: a constant image must
    produce zero contrast everywhere.
    """

    sigma: float
    radius: int
    kx: np.ndarray
    ky: np.ndarray

    @property
    def side(self) -> int:
        return 2 * self.radius + 1


@dataclass(frozen=True)
class WeibullFit:
    beta: float
    gamma: float
    kld: float


def gaussian_derivative_kernels(sigma: float) -> DerivativeKernelPair:
    """Sample -x/(2 pi sigma^4) exp(-(x^2+y^2)/(2 sigma^2)) on a grid.

    Support radius is ceil(3 sigma); the sampled kernel is mean-subtracted
    to enforce an exactly zero sum (the analytic sum is zero by oddness,
    mean subtraction removes the float residue).
    """
    if not (sigma > 0):
        raise BadSigma(f"sigma must be > 0, got {sigma}")
    radius = math.ceil(3 * sigma)
    offs = np.arange(-radius, radius + 1, dtype=np.float64)
    xx, yy = np.meshgrid(offs, offs)  # xx varies along columns
    kx = -xx / (2 * np.pi * sigma**4) * np.exp(-(xx**2 + yy**2) / (2 * sigma**2))
    kx = kx - kx.mean()
    return DerivativeKernelPair(sigma=sigma, radius=radius, kx=kx, ky=kx.T.copy())


def gradient_magnitude(tri: np.ndarray, kernels: DerivativeKernelPair) -> np.ndarray:
    """Contrast map: sqrt of summed squared x/y responses of all 3 planes.

    Filtering uses mirror (whole-sample reflective) borders so the image
    frame does not read as an artificial edge.
    """
    h, w = tri.shape[:2]
    if h < kernels.side or w < kernels.side:
        raise ImageSmallerThanKernel(
            f"image {w}x{h} smaller than kernel side {kernels.side}"
        )
    acc = np.zeros((h, w), dtype=np.float64)
    for c in range(3):
        plane = tri[:, :, c]
        rx = ndimage.correlate(plane, kernels.kx, mode="mirror")
        ry = ndimage.correlate(plane, kernels.ky, mode="mirror")
        acc += rx * rx + ry * ry
    return np.sqrt(acc)


def _profile_root(log_u: np.ndarray):
    """Profile-likelihood score in gamma for unit-geometric-mean samples."""

    def g(gamma: float) -> float:
        w = np.exp(gamma * log_u)
        return float(np.sum(w * log_u) / np.sum(w) - 1.0 / gamma)

    return g


def fit_weibull(
    samples: np.ndarray,
    hist_bins: int = 256,
    min_samples: int = 100,
) -> WeibullFit:
    """Maximum-likelihood Weibull fit to strictly positive samples.

    gamma solves the profile-likelihood score by bracketed root-finding
    (the score is strictly increasing, so the root is unique); beta is the
    closed form (mean x^gamma)^(1/gamma). Samples are pre-scaled by their
    geometric mean for numerical stability, which leaves gamma unchanged
    and is undone in beta.

    kld compares the empirical histogram (hist_bins bins from 0 to the
    99.9th percentile) against the fitted per-bin Weibull mass.
    """
    x = np.asarray(samples, dtype=np.float64).ravel()
    x = x[x > 0]
    if x.size < min_samples:
        raise NoPositiveSamples(
            f"need >= {min_samples} positive samples, got {x.size}"
        )
    log_x = np.log(x)
    log_gm = float(log_x.mean())
    log_u = log_x - log_gm
    g = _profile_root(log_u)

    lo, hi = 0.05, 20.0
    for _ in range(60):
        if g(lo) <= 0:
            break
        lo /= 2.0
    for _ in range(60):
        if g(hi) >= 0:
            break
        hi *= 2.0
    if g(lo) > 0 or g(hi) < 0:
        raise NoConvergence("could not bracket the Weibull shape root")
    try:
        gamma = brentq(g, lo, hi, xtol=1e-12, rtol=8.9e-16, maxiter=200)
    except RuntimeError as exc:
        raise NoConvergence(str(exc)) from exc
    beta = math.exp(log_gm) * float(np.mean(np.exp(gamma * log_u))) ** (1.0 / gamma)

    # goodness of fit against the per-image histogram
    upper = float(np.quantile(x, 0.999))
    if upper <= 0:
        raise NoConvergence("degenerate sample quantile")
    edges = np.linspace(0.0, upper, hist_bins + 1)
    hist = build_histogram(x, edges)
    q = weibull_bin_mass(edges, beta, gamma)
    kld = kl_divergence(hist, q)
    return WeibullFit(beta=beta, gamma=gamma, kld=kld)


def weibull_pdf(x: np.ndarray, beta: float, gamma: float) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    pos = x > 0
    xb = x[pos] / beta
    out[pos] = (gamma / beta) * xb ** (gamma - 1) * np.exp(-(xb**gamma))
    return out


def weibull_cdf(x: np.ndarray, beta: float, gamma: float) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    return np.where(x <= 0, 0.0, -np.expm1(-((np.maximum(x, 0) / beta) ** gamma)))


def weibull_bin_mass(edges: np.ndarray, beta: float, gamma: float) -> np.ndarray:
    """Fitted probability mass per histogram bin (CDF differences)."""
    cdf = weibull_cdf(np.asarray(edges, dtype=np.float64), beta, gamma)
    return np.diff(cdf)


def sample_weibull(
    gamma: float, beta: float, n: int, rng: np.random.Generator
) -> np.ndarray:
    """Inverse-CDF draws beta * (-ln U)^(1/gamma); test oracle generator."""
    u = rng.uniform(size=n)
    return beta * (-np.log(u)) ** (1.0 / gamma)
