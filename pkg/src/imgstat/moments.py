"""Histogramming and distribution-shape statistics.

Moment estimators are the population (divide-by-n) versions so kurtosis
and skewness are plain standardized expectations; at per-image sample
sizes (>= 16384 pixels) the Bessel correction would be negligible anyway,
but the choice is pinned for reproducibility.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BadEdges, DegenerateSample, EmptyList, MismatchedEdges

KL_EPSILON = 1e-12  # q-floor before renormalizing, keeps divergence finite


@dataclass(frozen=True)
class MomentSummary:
    mean: float
    std: float
    skewness: float
    kurtosis: float


@dataclass(frozen=True)
class Histogram:
    """Binned empirical distribution with explicit edges.

    counts[i] tallies samples with edges[i] <= x < edges[i+1]; the final
    edge is inclusive. Out-of-range samples are tallied in ``overflow``.
    """

    edges: np.ndarray
    counts: np.ndarray
    overflow: float = 0.0

    @property
    def total(self) -> float:
        return float(self.counts.sum())

    def density(self) -> np.ndarray:
        """Per-bin probability mass (counts / total)."""
        total = self.total
        if total <= 0:
            return np.zeros_like(self.counts)
        return self.counts / total

    def same_edges(self, other: "Histogram") -> bool:
        return self.edges.shape == other.edges.shape and np.array_equal(
            self.edges, other.edges
        )

    def to_dict(self) -> dict:
        return {
            "edges": self.edges.tolist(),
            "counts": self.counts.tolist(),
            "overflow": self.overflow,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Histogram":
        return cls(
            edges=np.asarray(d["edges"], dtype=np.float64),
            counts=np.asarray(d["counts"], dtype=np.float64),
            overflow=float(d.get("overflow", 0.0)),
        )

    def to_csv(self) -> str:
        lines = ["edge_low,edge_high,density"]
        dens = self.density()
        for lo, hi, p in zip(self.edges[:-1], self.edges[1:], dens):
            lines.append(f"{lo!r},{hi!r},{p!r}")
        return "\n".join(lines) + "\n"


def moment_summary(samples: np.ndarray) -> MomentSummary:
    """Mean, std and standardized 3rd/4th moments of a sample.

    Raises DegenerateSample for n < 2 or zero variance.
    """
    x = np.asarray(samples, dtype=np.float64).ravel()
    if x.size < 2:
        raise DegenerateSample(f"need >= 2 samples, got {x.size}")
    mu = float(x.mean())
    d = x - mu
    var = float(np.mean(d * d))
    if var <= 0.0:
        raise DegenerateSample("constant sample has no shape statistics")
    std = var**0.5
    m3 = float(np.mean(d**3))
    m4 = float(np.mean(d**4))
    return MomentSummary(
        mean=mu,
        std=std,
        skewness=m3 / std**3,
        kurtosis=m4 / (var * var),
    )


def build_histogram(samples: np.ndarray, edges: np.ndarray) -> Histogram:
    """Histogram samples over explicit strictly increasing edges."""
    edges = np.asarray(edges, dtype=np.float64)
    if edges.ndim != 1 or edges.size < 2 or not np.all(np.diff(edges) > 0):
        raise BadEdges("edges must be 1-D and strictly increasing")
    x = np.asarray(samples, dtype=np.float64).ravel()
    counts, _ = np.histogram(x, bins=edges)
    counts = counts.astype(np.float64)
    overflow = float(x.size - counts.sum())
    return Histogram(edges=edges, counts=counts, overflow=overflow)


def average_histograms(hists: list[Histogram]) -> Histogram:
    """Equal-weight average of per-image densities over identical edges."""
    if not hists:
        raise EmptyList("no histograms to average")
    first = hists[0]
    for h in hists[1:]:
        if not first.same_edges(h):
            raise MismatchedEdges("histograms have different edges")
    dens = np.mean([h.density() for h in hists], axis=0)
    over = float(
        np.mean([h.overflow / h.total if h.total > 0 else 0.0 for h in hists])
    )
    return Histogram(edges=first.edges.copy(), counts=dens, overflow=over)


def kl_divergence(p: Histogram, q) -> float:
    """KL(p || q) in nats over shared bins.

    ``q`` may be a Histogram with identical edges or a raw density array.
    q is floored at KL_EPSILON and renormalized so bins where p > 0 always
    have positive reference mass.
    """
    if isinstance(q, Histogram):
        if not p.same_edges(q):
            raise MismatchedEdges("p and q have different edges")
        q_mass = q.density()
    else:
        q_mass = np.asarray(q, dtype=np.float64)
        if q_mass.shape != p.counts.shape:
            raise MismatchedEdges("q density length does not match p bins")
    p_mass = p.density()
    q_mass = np.maximum(q_mass, KL_EPSILON)
    q_mass = q_mass / q_mass.sum()
    mask = p_mass > 0
    return float(np.sum(p_mass[mask] * np.log(p_mass[mask] / q_mass[mask])))
