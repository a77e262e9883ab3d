from .curves import TokenBucketCurve, RateLatencyCurve, PiecewiseLinearCurve
from .operations import (
    aggregate,
    convolve_rate_latency,
    deconvolve_output_arrival,
    horizontal_deviation,
    vertical_deviation,
    leftover_arbitrary,
    leftover_fp_single_node,
    leftover_lower_priority,
)

__all__ = [
    'TokenBucketCurve',
    'RateLatencyCurve',
    'PiecewiseLinearCurve',
    'aggregate',
    'convolve_rate_latency',
    'deconvolve_output_arrival',
    'horizontal_deviation',
    'vertical_deviation',
    'leftover_arbitrary',
    'leftover_fp_single_node',
    'leftover_lower_priority',
]
