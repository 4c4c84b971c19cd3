"""Exception hierarchy shared by all imgstat modules."""


class ImgstatError(Exception):
    """Base class for all imgstat errors."""


# corpus ingestion
class DecodeError(ImgstatError):
    """File could not be decoded as a supported raster image."""


class TooSmall(ImgstatError):
    """Image is smaller than the requested crop window."""


class EmptyCorpus(ImgstatError):
    """Directory scan produced no candidate image entries."""


# colorspace
class ZeroMeanImage(ImgstatError):
    """Luminance normalization is undefined for an all-black image."""


# moments / histograms
class DegenerateSample(ImgstatError):
    """Sample is constant or too small for moment statistics."""


class BadEdges(ImgstatError):
    """Histogram bin edges are not strictly increasing."""


class MismatchedEdges(ImgstatError):
    """Histograms do not share identical bin edges."""


class EmptyList(ImgstatError):
    """An operation requiring at least one histogram got none."""


# contrast
class BadSigma(ImgstatError):
    """Gaussian derivative scale must be positive."""


class ImageSmallerThanKernel(ImgstatError):
    """Convolution input is smaller than the kernel support."""


class NoPositiveSamples(ImgstatError):
    """Weibull fitting needs strictly positive contrast samples."""


class NoConvergence(ImgstatError):
    """Iterative fit failed to bracket or converge on a root."""


# random filters
class BadSide(ImgstatError):
    """Filter side length too small for zero-mean normalization."""


# regions / power-law fits
class InsufficientSupport(ImgstatError):
    """Fit requires more distinct support points than available."""


# spectrum
class NonSquareImage(ImgstatError):
    """Power spectrum requires a square raster."""


class BaseFreqOffGrid(ImgstatError):
    """Spike base frequency does not lie on the spectrum's grid."""


class PeriodExceedsImage(ImgstatError):
    """Impulse pattern period is larger than the image side."""


class BadConfig(ImgstatError):
    """Invalid parameter combination for a synthetic generator."""


# corpus comparison
class ConfigMismatch(ImgstatError):
    """Corpora were analyzed under different configurations.

    Carries the names of the differing fields in ``fields``.
    """

    def __init__(self, fields):
        self.fields = list(fields)
        super().__init__("config mismatch in: " + ", ".join(self.fields))


class AllImagesFailed(ImgstatError):
    """Every manifest entry failed to decode or process."""
