"""Sampled brute-force versions of the curve operations, used to check the closed forms.

Grids always contain the breakpoints of the curves involved, so the extrema of
piecewise-linear expressions are sampled exactly.
"""

from typing import Iterable

import numpy as np

from curves.curves import PiecewiseLinearCurve


def sample_times(horizon: float, step: float, curves: Iterable[PiecewiseLinearCurve] = ()) -> np.ndarray:
    """Uniform grid on [0, horizon] merged with every breakpoint time below the horizon."""
    grid = np.arange(0.0, horizon + step / 2, step)
    extra = [t for curve in curves for t in curve.times if t <= horizon]
    return np.unique(np.concatenate([grid, np.asarray(extra, dtype=float)]))


def inf_convolution(f: PiecewiseLinearCurve, g: PiecewiseLinearCurve, times: np.ndarray) -> np.ndarray:
    """``(f * g)(t) = inf_{0 <= s <= t} f(s) + g(t - s)`` for each grid point, s on the grid."""
    out = np.empty_like(times)
    for index, t in enumerate(times):
        s = times[: index + 1]
        out[index] = np.min(f(s) + g(t - s))
    return out


def sup_deconvolution(f: PiecewiseLinearCurve, g: PiecewiseLinearCurve, t: float, shifts: np.ndarray) -> float:
    """``(f / g)(t) = sup_{s >= 0} f(t + s) - g(s)`` over the sampled shifts."""
    return float(np.max(f.right_limit(t + shifts) - g(shifts)))


def max_horizontal_gap(alpha: PiecewiseLinearCurve, beta: PiecewiseLinearCurve, times: np.ndarray) -> float:
    """Largest horizontal distance from ``alpha`` to ``beta`` over the sampled times.

    The distance at ``t`` uses the right limit of ``alpha``, so the burst at the
    origin is accounted for.
    """
    levels = alpha.right_limit(times)
    return max(beta.pseudo_inverse(level) - t for t, level in zip(times, levels))


def max_vertical_gap(alpha: PiecewiseLinearCurve, beta: PiecewiseLinearCurve, times: np.ndarray) -> float:
    """Largest vertical distance ``alpha(t+) - beta(t)`` over the sampled times."""
    return float(np.max(alpha.right_limit(times) - beta(times)))
