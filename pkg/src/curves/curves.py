"""Arrival and service curve families.

All quantities are SI base units: bits, bits/second, seconds.
"""

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

Number = Union[float, np.ndarray]


@dataclass(frozen=True)
class TokenBucketCurve:
    """Token-bucket arrival curve ``t -> sigma + rho * t`` for t > 0, 0 at t = 0.

    Args:
        sigma: burst in bits
        rho: long-term rate in bits/second
    """
    sigma: float
    rho: float

    def __post_init__(self):
        if not (self.sigma >= 0 and math.isfinite(self.sigma)):
            raise ValueError(f"token bucket burst must be finite and >= 0, got {self.sigma}")
        if not (self.rho >= 0 and math.isfinite(self.rho)):
            raise ValueError(f"token bucket rate must be finite and >= 0, got {self.rho}")

    def __call__(self, t: Number) -> Number:
        t = np.asarray(t, dtype=float)
        values = np.where(t > 0, self.sigma + self.rho * t, 0.0)
        return float(values) if values.ndim == 0 else values

    def __add__(self, other: "TokenBucketCurve") -> "TokenBucketCurve":
        return TokenBucketCurve(self.sigma + other.sigma, self.rho + other.rho)


@dataclass(frozen=True)
class RateLatencyCurve:
    """Rate-latency service curve ``t -> rate * max(0, t - latency)``.

    ``rate`` may be ``math.inf``, which gives the pure-delay curve used as the
    neutral element of convolution when latency is 0.
    """
    rate: float
    latency: float

    def __post_init__(self):
        if not self.rate > 0:
            raise ValueError(f"service rate must be > 0, got {self.rate}")
        if not (self.latency >= 0 and math.isfinite(self.latency)):
            raise ValueError(f"service latency must be finite and >= 0, got {self.latency}")

    def __call__(self, t: Number) -> Number:
        t = np.asarray(t, dtype=float)
        with np.errstate(invalid="ignore"):
            values = np.where(t > self.latency, self.rate * (t - self.latency), 0.0)
        return float(values) if values.ndim == 0 else values


Breakpoint = Tuple[float, float, float]


@dataclass(frozen=True)
class PiecewiseLinearCurve:
    """Generic non-decreasing piecewise-linear curve, used to carry oracle computations.

    ``breakpoints`` is a tuple of ``(time, value, right_slope)``. The curve is 0 at
    t = 0 and, for t > 0, follows the segment of the last breakpoint at or before t,
    so a token bucket is ``((0, sigma, rho),)`` and its jump sits at the origin.
    """
    breakpoints: Tuple[Breakpoint, ...]

    def __post_init__(self):
        if not self.breakpoints:
            raise ValueError("a piecewise linear curve needs at least one breakpoint")
        times = [b[0] for b in self.breakpoints]
        if times[0] != 0:
            raise ValueError("first breakpoint must be at time 0")
        if any(t2 <= t1 for t1, t2 in zip(times, times[1:])):
            raise ValueError("breakpoint times must be strictly increasing")
        for (t1, v1, s1), (t2, v2, _) in zip(self.breakpoints, self.breakpoints[1:]):
            if v2 < v1 + s1 * (t2 - t1) - 1e-12 * max(1.0, abs(v2)):
                raise ValueError("curve must be non-decreasing")
        if any(v < 0 or s < 0 for _, v, s in self.breakpoints):
            raise ValueError("breakpoint values and slopes must be non-negative")

    @classmethod
    def from_token_bucket(cls, alpha: TokenBucketCurve) -> "PiecewiseLinearCurve":
        return cls(((0.0, alpha.sigma, alpha.rho),))

    @classmethod
    def from_rate_latency(cls, beta: RateLatencyCurve) -> "PiecewiseLinearCurve":
        if beta.latency == 0:
            return cls(((0.0, 0.0, beta.rate),))
        return cls(((0.0, 0.0, 0.0), (beta.latency, 0.0, beta.rate)))

    @property
    def times(self) -> np.ndarray:
        return np.array([b[0] for b in self.breakpoints])

    def right_limit(self, t: Number) -> Number:
        """Value just after ``t`` (equals the curve value except at the origin)."""
        t = np.asarray(t, dtype=float)
        times = self.times
        values = np.array([b[1] for b in self.breakpoints])
        slopes = np.array([b[2] for b in self.breakpoints])
        idx = np.searchsorted(times, t, side="right") - 1
        idx = np.clip(idx, 0, len(times) - 1)
        out = values[idx] + slopes[idx] * (t - times[idx])
        return float(out) if out.ndim == 0 else out

    def __call__(self, t: Number) -> Number:
        t = np.asarray(t, dtype=float)
        out = np.where(t > 0, self.right_limit(np.maximum(t, 0.0)), 0.0)
        return float(out) if out.ndim == 0 else out

    def pseudo_inverse(self, y: float) -> float:
        """Smallest t >= 0 with curve(t) >= y, ``math.inf`` if never reached."""
        if y <= 0:
            return 0.0
        for index, (t, v, s) in enumerate(self.breakpoints):
            end = self.breakpoints[index + 1][0] if index + 1 < len(self.breakpoints) else math.inf
            if v >= y:
                return t
            if s > 0:
                crossing = t + (y - v) / s
                if crossing <= end:
                    return crossing
        return math.inf
