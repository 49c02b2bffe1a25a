"""Exception hierarchy shared by all analysis modules.

Every error raised on bad input derives from :class:`FractalisError`
(CLI exit code 2); failures of the numerical machinery itself derive
from :class:`NumericError` (CLI exit code 3).
"""


class FractalisError(Exception):
    """Base class for all input and validation errors."""

    exit_code = 2


class NumericError(FractalisError):
    """A numerical routine could not reach its accuracy target."""

    exit_code = 3


# series-core
class TooShort(FractalisError):
    pass


class NonPositiveValue(FractalisError):
    pass


class LengthMismatch(FractalisError):
    pass


class ZeroVariance(FractalisError):
    pass


# ingest
class MalformedHeader(FractalisError):
    pass


class EmptyFile(FractalisError):
    pass


class DuplicateDate(FractalisError):
    pass


class BadRow(FractalisError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


# density
class BadBandwidth(FractalisError):
    pass


class EmptyGrid(FractalisError):
    pass


class InvalidGrid(FractalisError):
    pass


class GridMismatch(FractalisError):
    pass


# autocorr
class LagTooLarge(FractalisError):
    pass


# rescaled-range
class ScaleTooLarge(FractalisError):
    pass


class AllBlocksDegenerate(FractalisError):
    pass


class InsufficientScales(FractalisError):
    pass


# stable
class QuadratureFailure(NumericError):
    pass


class GaussianHasNoTailLaw(FractalisError):
    pass


class DegenerateQuantiles(FractalisError):
    pass


class SampleTooSmall(FractalisError):
    pass


class TableClippingWarning(UserWarning):
    """A quantile statistic fell outside the fitting tables and was clipped."""


class DegenerateScaleWarning(UserWarning):
    """A scale was dropped from a log-log regression (all blocks degenerate)."""
