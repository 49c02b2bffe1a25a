"""Series container, summary statistics, and the detrending transforms.

A :class:`Series` is the universal carrier for prices, returns,
differences and simulated noise: an ordered float vector with optional
strictly-increasing date labels. All transforms are pure functions and
safe for concurrent use.
"""

from __future__ import annotations

import datetime as _dt
from dataclasses import dataclass

import numpy as np

from .errors import (
    FractalisError,
    LengthMismatch,
    NonPositiveValue,
    TooShort,
    ZeroVariance,
)

__all__ = [
    "Series",
    "SummaryStats",
    "returns",
    "log_returns",
    "diff_within",
    "diff_lagged",
    "diff_same_day",
    "normalize",
    "summarize",
]


def _frozen_array(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        arr = arr.reshape(-1)
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Series:
    """Univariate ordered sequence of finite reals with optional date labels."""

    values: np.ndarray
    labels: tuple[_dt.date, ...] | None = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values))
        if self.values.size < 1:
            raise TooShort("a Series needs at least one observation")
        if not np.all(np.isfinite(self.values)):
            raise FractalisError("Series values must be finite (no NaN/inf)")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.values.size:
                raise LengthMismatch(
                    f"{len(labels)} labels for {self.values.size} values"
                )
            for a, b in zip(labels, labels[1:]):
                if not a < b:
                    raise LengthMismatch("labels must be strictly increasing")
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return int(self.values.size)

    def with_values(self, values, name: str | None = None) -> "Series":
        """Same labels, new values (lengths must agree)."""
        values = np.asarray(values, dtype=np.float64)
        if self.labels is not None and values.size != len(self.labels):
            raise LengthMismatch("replacement values do not match label count")
        return Series(values, self.labels, self.name if name is None else name)


@dataclass(frozen=True)
class SummaryStats:
    """Mean, standard deviation and the five quartile-boundary quantiles."""

    mean: float
    sd: float
    quantiles: tuple[float, float, float, float, float]
    n: int
    ddof: int = 1


def _require_length(s: Series, n: int) -> None:
    if len(s) < n:
        raise TooShort(f"need at least {n} observations, got {len(s)}")


def _dropped_first_labels(s: Series) -> tuple[_dt.date, ...] | None:
    return s.labels[1:] if s.labels is not None else None


def returns(y: Series) -> Series:
    """Ratios of consecutive values, y[n]/y[n-1]; drops the first label."""
    _require_length(y, 2)
    v = y.values
    if np.any(v <= 0.0):
        raise NonPositiveValue("returns need strictly positive values")
    return Series(v[1:] / v[:-1], _dropped_first_labels(y), f"returns({y.name})")


def log_returns(y: Series) -> Series:
    """Natural log of consecutive ratios, ln(y[n]/y[n-1])."""
    _require_length(y, 2)
    v = y.values
    if np.any(v <= 0.0):
        raise NonPositiveValue("log returns need strictly positive values")
    return Series(
        np.log(v[1:] / v[:-1]), _dropped_first_labels(y), f"log_returns({y.name})"
    )


def diff_within(y: Series) -> Series:
    """First differences inside one series, y[n] - y[n-1]."""
    _require_length(y, 2)
    v = y.values
    return Series(v[1:] - v[:-1], _dropped_first_labels(y), f"diff({y.name})")


def _require_aligned(a: Series, b: Series) -> None:
    if len(a) != len(b):
        raise LengthMismatch(f"series lengths differ: {len(a)} vs {len(b)}")
    if a.labels is not None and b.labels is not None and a.labels != b.labels:
        raise LengthMismatch("series date labels are not aligned")


def diff_lagged(x: Series, y: Series) -> Series:
    """One-day-lagged differences x[n] - y[n-1] for n = 1..N."""
    _require_aligned(x, y)
    _require_length(x, 2)
    return Series(
        x.values[1:] - y.values[:-1],
        _dropped_first_labels(x),
        f"lagged_diff({x.name},{y.name})",
    )


def diff_same_day(y: Series, x: Series) -> Series:
    """Same-index differences y[n] - x[n]; keeps the full length."""
    _require_aligned(y, x)
    return Series(y.values - x.values, y.labels, f"same_day_diff({y.name},{x.name})")


def normalize(s: Series, ddof: int = 1) -> Series:
    """Center to mean zero and rescale to unit standard deviation.

    Uses the sample standard deviation (``ddof=1``) by default, matching
    the convention of the summary statistics.
    """
    v = s.values
    sd = float(np.std(v, ddof=ddof)) if len(s) > 1 else 0.0
    if sd == 0.0:
        raise ZeroVariance("cannot normalize a constant series")
    return Series((v - v.mean()) / sd, s.labels, f"normalized({s.name})")


def summarize(s: Series, ddof: int = 1) -> SummaryStats:
    """Mean, sd and the (0, 25, 50, 75, 100)% quantiles of a series.

    Quantiles interpolate linearly between order statistics. ``ddof=1``
    gives the sample standard deviation; a single observation has sd 0.
    """
    v = s.values
    q = np.quantile(v, [0.0, 0.25, 0.5, 0.75, 1.0], method="linear")
    sd = float(np.std(v, ddof=ddof)) if v.size > ddof else 0.0
    return SummaryStats(
        mean=float(v.mean()),
        sd=sd,
        quantiles=tuple(float(x) for x in q),
        n=int(v.size),
        ddof=ddof,
    )
