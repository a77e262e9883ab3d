"""Closed-form min-plus operations on token-bucket and rate-latency curves."""

from typing import Iterable

from curves.curves import TokenBucketCurve, RateLatencyCurve
from utils.errors import UnstableNode


def aggregate(curves: Iterable[TokenBucketCurve]) -> TokenBucketCurve:
    """Sum of token-bucket curves (aggregate arrival curve)."""
    sigma = 0.0
    rho = 0.0
    for curve in curves:
        sigma += curve.sigma
        rho += curve.rho
    return TokenBucketCurve(sigma, rho)


def convolve_rate_latency(a: RateLatencyCurve, b: RateLatencyCurve) -> RateLatencyCurve:
    """Min-plus convolution of two rate-latency curves.

    Args:
        a: first service curve
        b: second service curve

    Returns:
        ``(min(Ra, Rb), Ta + Tb)``, the service of the two servers in tandem
    """
    return RateLatencyCurve(rate=min(a.rate, b.rate), latency=a.latency + b.latency)


def deconvolve_output_arrival(alpha: TokenBucketCurve, beta: RateLatencyCurve) -> TokenBucketCurve:
    """Output arrival curve ``alpha / beta`` of a flow leaving a server.

    Args:
        alpha: arrival curve at the server input
        beta: service curve offered to the flow

    Returns:
        ``(sigma + rho * latency, rho)``

    Raises:
        UnstableNode: if ``rho > rate``
    """
    _check_stable(alpha, beta)
    return TokenBucketCurve(alpha.sigma + alpha.rho * beta.latency, alpha.rho)


def horizontal_deviation(alpha: TokenBucketCurve, beta: RateLatencyCurve) -> float:
    """Delay bound ``sigma / rate + latency``.

    Raises:
        UnstableNode: if ``rho > rate``
    """
    _check_stable(alpha, beta)
    return alpha.sigma / beta.rate + beta.latency


def vertical_deviation(alpha: TokenBucketCurve, beta: RateLatencyCurve) -> float:
    """Backlog bound ``sigma + rho * latency``.

    Raises:
        UnstableNode: if ``rho > rate``
    """
    _check_stable(alpha, beta)
    return alpha.sigma + alpha.rho * beta.latency


def leftover_arbitrary(beta: RateLatencyCurve, alpha: TokenBucketCurve) -> RateLatencyCurve:
    """Residual service left to a flow after cross traffic ``alpha`` under arbitrary multiplexing.

    ``beta`` must be a strict service curve; the result is strict as well.

    Raises:
        UnstableNode: if the cross traffic rate reaches the service rate
    """
    if alpha.rho >= beta.rate:
        raise UnstableNode(f"cross traffic rate {alpha.rho} >= service rate {beta.rate}")
    if alpha.sigma == 0 and alpha.rho == 0:
        return beta
    rate = beta.rate - alpha.rho
    return RateLatencyCurve(rate, beta.latency + (alpha.sigma + alpha.rho * beta.latency) / rate)


def leftover_fp_single_node(
    beta: RateLatencyCurve,
    higher: Iterable[TokenBucketCurve],
    max_lower_frame: float,
) -> RateLatencyCurve:
    """Residual service of a non-preemptive fixed-priority server for one priority level.

    Args:
        beta: strict service curve of the node
        higher: arrival curves of the flows with higher or equal priority
        max_lower_frame: largest frame (bits) among strictly lower priority flows

    Returns:
        ``(R - sum rho, T + (sum sigma + sum rho * T + L) / (R - sum rho))``

    Raises:
        UnstableNode: if the higher-priority rate reaches the service rate
    """
    cross = aggregate(higher)
    if cross.rho >= beta.rate:
        raise UnstableNode(f"higher priority rate {cross.rho} >= service rate {beta.rate}")
    if cross.sigma == 0 and cross.rho == 0 and max_lower_frame == 0:
        return beta
    rate = beta.rate - cross.rho
    latency = beta.latency + (cross.sigma + cross.rho * beta.latency + max_lower_frame) / rate
    return RateLatencyCurve(rate, latency)


def leftover_lower_priority(beta: RateLatencyCurve, max_lower_frame: float) -> RateLatencyCurve:
    """Service left after one non-preemptive lower-priority frame: ``(R, T + L / R)``."""
    if max_lower_frame < 0:
        raise ValueError(f"frame length must be >= 0, got {max_lower_frame}")
    if max_lower_frame == 0:
        return beta
    return RateLatencyCurve(beta.rate, beta.latency + max_lower_frame / beta.rate)


def _check_stable(alpha: TokenBucketCurve, beta: RateLatencyCurve):
    if alpha.rho > beta.rate:
        raise UnstableNode(f"arrival rate {alpha.rho} > service rate {beta.rate}")
