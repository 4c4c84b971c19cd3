"""Analysis configuration: every knob that affects computed statistics.

The full config is serialized verbatim into every output document so runs
are reproducible and comparisons can refuse mismatched settings.
"""

from dataclasses import dataclass, asdict, fields

TOOL_VERSION = "0.1.0"
SCHEMA_VERSION = 1

# PRNG used for every seeded draw in the toolkit; recorded in reports so
# filters and synthetic corpora are reconstructible from seeds alone.
PRNG_NAME = "numpy-pcg64"


@dataclass(frozen=True)
class AnalysisConfig:
    crop_size: int = 128
    sigma: float = 1.0

    # luminance histogram: normalized luminance, mean 1 per image
    lum_bins: int = 100
    lum_max: float = 5.0

    # contrast histogram for corpus averaging (per-image Weibull KLD uses
    # per-image 99.9th-percentile binning, see contrast.fit_weibull)
    contrast_bins: int = 256
    contrast_max: float = 8000.0

    # zero-mean random filter battery
    filter_seed: int = 101
    filter_count: int = 3
    filter_side: int = 8
    filter_bins: int = 256
    filter_max: float = 2048.0  # |response| <= 255 * side by Cauchy-Schwarz

    # homogeneous regions
    n_levels: int = 16
    connectivity: int = 8
    s_max: int = 90

    # power spectrum
    fit_f_min: float = 2.0 / 128.0
    fit_f_max: float = 0.5 - 2.0 / 128.0
    spike_base_freq: float = 4.0 / 128.0
    spike_threshold_db: float = 6.0
    spike_window: int = 9

    def to_dict(self) -> dict:
        d = asdict(self)
        d["prng"] = PRNG_NAME
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisConfig":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in known})

    def mismatched_fields(self, other: "AnalysisConfig") -> list[str]:
        """Names of fields on which the two configs disagree."""
        return [
            f.name
            for f in fields(self)
            if getattr(self, f.name) != getattr(other, f.name)
        ]
