"""Inequality measures computed directly from micro-data samples.

Everything here is driven by the empirical Lorenz curve: the piecewise-linear
plot of cumulative income share against cumulative population share, with the
sample sorted poorest to richest.  The Gini coefficient is one minus twice the
trapezoidal area under that curve, which coincides exactly with the pairwise
mean-difference form.  Quantile shares interpolate linearly on the curve, so a
cut point falling inside an observation splits that observation
proportionally.

All operations are pure functions over immutable inputs and may be shared
freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSampleError,
    DivisionByZeroShareError,
    DomainError,
    EmptyInputError,
)

# Slack for float wobble when validating curve invariants.
_CONVEXITY_TOL = 1e-9


@dataclass(frozen=True)
class IncomeSample:
    """Non-negative values in ascending order with a strictly positive total.

    Use :meth:`from_values` to build one from unsorted data.  Direct
    construction requires the array to already satisfy the invariants.
    """

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1:
            raise DomainError("sample values must be one-dimensional")
        if arr.size == 0:
            raise EmptyInputError("sample must contain at least one value")
        if not np.all(np.isfinite(arr)):
            raise DomainError("sample values must be finite")
        if arr[0] < 0:
            raise DomainError("sample values must be non-negative")
        if np.any(np.diff(arr) < 0):
            raise DomainError("sample values must be in non-decreasing order")
        if arr[-1] <= 0:
            raise DegenerateSampleError("sample total must be positive")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_values(cls, values) -> "IncomeSample":
        """Sort ``values`` ascending and wrap them as a sample."""
        arr = np.sort(np.asarray(list(values), dtype=float))
        return cls(arr)

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def total(self) -> float:
        return float(self.values.sum())

    @property
    def mean(self) -> float:
        return float(self.values.mean())


def _as_sample(sample) -> IncomeSample:
    if isinstance(sample, IncomeSample):
        return sample
    return IncomeSample.from_values(sample)


@dataclass(frozen=True)
class LorenzCurve:
    """Piecewise-linear Lorenz curve: (population share p, income share L).

    Invariants: starts at (0, 0), ends at (1, 1), p strictly increasing,
    L non-decreasing, L(p) <= p, and chord slopes non-decreasing (convexity).
    """

    p: np.ndarray
    L: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        L = np.asarray(self.L, dtype=float)
        if p.shape != L.shape or p.ndim != 1 or p.size < 2:
            raise DomainError("curve needs matching 1-d arrays of >= 2 points")
        if p[0] != 0.0 or L[0] != 0.0 or p[-1] != 1.0 or L[-1] != 1.0:
            raise DomainError("curve must run from (0, 0) to (1, 1)")
        if np.any(np.diff(p) <= 0):
            raise DomainError("population shares must be strictly increasing")
        if np.any(np.diff(L) < -_CONVEXITY_TOL):
            raise DomainError("income shares must be non-decreasing")
        if np.any(L > p + _CONVEXITY_TOL):
            raise DomainError("curve must lie on or below the diagonal")
        slopes = np.diff(L) / np.diff(p)
        if np.any(np.diff(slopes) < -_CONVEXITY_TOL):
            raise DomainError("curve must be convex (non-decreasing slopes)")
        for name, arr in (("p", p), ("L", L)):
            arr = arr.copy()
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.p.tolist(), self.L.tolist()))

    def value_at(self, p: float) -> float:
        """Income share of the poorest fraction ``p`` (linear interpolation)."""
        if not 0.0 <= p <= 1.0:
            raise DomainError(f"population share {p!r} outside [0, 1]")
        return float(np.interp(p, self.p, self.L))


def lorenz_curve(sample) -> LorenzCurve:
    """Empirical Lorenz curve of a sample.

    Returns n + 1 points; point k is (k/n, sum of the smallest k values over
    the total).
    """
    sample = _as_sample(sample)
    cum = np.cumsum(sample.values)
    p = np.arange(sample.n + 1) / sample.n
    L = np.concatenate(([0.0], cum / cum[-1]))
    L[-1] = 1.0
    return LorenzCurve(p, L)


def gini(sample) -> float:
    """Gini coefficient: area between the equality line and the Lorenz curve
    over the whole area under the equality line.

    Computed as 1 - 2 * (trapezoidal area under the Lorenz curve), which is
    identical to the pairwise mean-difference form
    sum_ij |y_i - y_j| / (2 n^2 mean).  Population estimator: the maximum for
    a sample of size n is 1 - 1/n.
    """
    curve = lorenz_curve(sample)
    area = float(np.sum((curve.L[1:] + curve.L[:-1]) * np.diff(curve.p)) / 2.0)
    return max(1.0 - 2.0 * area, 0.0)


def _check_percent(x) -> float:
    x = float(x)
    if not 0.0 < x <= 50.0:
        raise DomainError(f"percent cut {x!r} outside (0, 50]")
    return x


def bottom_share(sample, x) -> float:
    """Income share held by the poorest ``x`` percent, x in (0, 50]."""
    x = _check_percent(x)
    return lorenz_curve(sample).value_at(x / 100.0)


def top_share(sample, x) -> float:
    """Income share held by the richest ``x`` percent, x in (0, 50]."""
    x = _check_percent(x)
    return 1.0 - lorenz_curve(sample).value_at(1.0 - x / 100.0)


def ratio_b_over_t(sample, x) -> float:
    """Bottom-x share over top-x share; 0 when the bottom share is zero.

    Always <= 1 for x <= 50, because the top tail share can never fall below
    the bottom tail share of the same width.
    """
    x = _check_percent(x)
    curve = lorenz_curve(_as_sample(sample))
    bottom = curve.value_at(x / 100.0)
    if bottom == 0.0:
        return 0.0
    top = 1.0 - curve.value_at(1.0 - x / 100.0)
    # float noise can push bottom/top one ulp past 1 when the shares tie
    return min(bottom / top, 1.0)


def palma_ratio(sample) -> float:
    """Top-10% share over bottom-40% share.

    Ranges over [1/4, infinity); raises when the bottom 40% holds nothing.
    """
    curve = lorenz_curve(_as_sample(sample))
    bottom40 = curve.value_at(0.40)
    if bottom40 == 0.0:
        raise DivisionByZeroShareError("bottom 40% share is zero")
    top10 = 1.0 - curve.value_at(0.90)
    return top10 / bottom40


@dataclass(frozen=True)
class QuantileShares:
    """On-demand bottom/top share queries over one precomputed Lorenz curve."""

    curve: LorenzCurve

    @classmethod
    def from_sample(cls, sample) -> "QuantileShares":
        return cls(lorenz_curve(sample))

    def bottom(self, x) -> float:
        x = _check_percent(x)
        return self.curve.value_at(x / 100.0)

    def top(self, x) -> float:
        x = _check_percent(x)
        return 1.0 - self.curve.value_at(1.0 - x / 100.0)

    def b_over_t(self, x) -> float:
        bottom = self.bottom(x)
        if bottom == 0.0:
            return 0.0
        return min(bottom / self.top(x), 1.0)
