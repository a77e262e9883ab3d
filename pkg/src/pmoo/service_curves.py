"""End-to-end service curves of a flow along the subpaths of a ring.

These functions assemble one subpath at a time, interferer by interferer. The
matrix system in ``pmoo.matrix_system`` builds the same quantities for every
subpath at once.
"""

import logging
from typing import Mapping

from curves import TokenBucketCurve, deconvolve_output_arrival, horizontal_deviation, vertical_deviation
from model import Flow, InterfererCategory, RingNetwork
from pmoo.subpath import DelayBound, LatencyTerms, Policy, SubpathKey, SubpathServiceCurve
from utils.errors import NotFeedforward, UnstableSubpath

logger = logging.getLogger(__name__)


def node_latency(net: RingNetwork, flow: Flow, node: int, policy: Policy = Policy.ARBITRARY) -> float:
    """Latency of ``node`` as seen by ``flow``.

    Under fixed priority the node latency grows by the transmission time of the
    largest frame among the strictly lower priority flows crossing the node.
    """
    base = net.node(node)
    frame = 0.0
    if policy is Policy.FP:
        _, lower = net.hp_lp_sets(flow, node)
        frame = max((other.max_frame for other in lower), default=0.0)
    return base.latency + frame / base.rate


def residual_rate(net: RingNetwork, flow: Flow, n: int, policy: Policy = Policy.ARBITRARY) -> float:
    """Smallest rate left to ``flow`` on the nodes of its n-hop subpath.

    Raises:
        UnstableSubpath: if the competing traffic exhausts some node of the subpath
    """
    rate = min(
        net.node(k).rate - sum(other.rho for other in _competitors(net, flow, k, policy))
        for k in net.subpath(flow, n)
    )
    if rate <= 0:
        raise UnstableSubpath(f"flow {flow.flow_id}: no residual rate on its first {n} hops")
    return rate


def _competitors(net: RingNetwork, flow: Flow, node: int, policy: Policy):
    if policy is Policy.FP:
        higher, _ = net.hp_lp_sets(flow, node)
        return higher
    return tuple(other for other in net.crossing_flows(node) if other.flow_id != flow.flow_id)


def subpath_latency_terms(net: RingNetwork, flow: Flow, n: int, policy: Policy = Policy.ARBITRARY) -> LatencyTerms:
    """Split the latency of the n-hop service curve of ``flow`` into constant and burst-dependent parts.

    Every interferer pays ``rho_i`` times the latency of the nodes it shares with
    the subpath. An interferer whose source lies on the subpath also pays its
    initial burst; one that enters through the source of ``flow`` pays the burst
    it carries there, which is left symbolic.
    """
    nodes = net.subpath(flow, n)
    rate = residual_rate(net, flow, n, policy)
    latencies = {k: node_latency(net, flow, k, policy) for k in nodes}

    interference = 0.0
    cyclic = []
    for other in net.interference_set(flow, n, priority_filter=policy is Policy.FP):
        category = net.classify_interferer(other, flow, n)
        shared = sum(latencies[k] for k in nodes if net.crosses(other, k))
        interference += other.rho * shared
        if category is not InterfererCategory.CROSSES_F_SOURCE:
            interference += other.sigma0
        if category is not InterfererCategory.SOURCE_ON_SUBPATH:
            cyclic.append(SubpathKey(other.flow_id, net.entry_burst_hops(other, flow)))

    constant = sum(latencies[k] for k in nodes) + interference / rate
    return LatencyTerms(SubpathKey(flow.flow_id, n), rate, constant, tuple(cyclic))


def tandem_service_curve(net: RingNetwork, flow: Flow, n: int,
                         policy: Policy = Policy.ARBITRARY) -> SubpathServiceCurve:
    """Service curve of a subpath whose interferers all start on the subpath.

    Raises:
        NotFeedforward: if some interferer enters through the source of ``flow``
        UnstableSubpath: if no residual rate is left
    """
    terms = subpath_latency_terms(net, flow, n, policy)
    if terms.cyclic:
        raise NotFeedforward(f"flow {flow.flow_id}: flows "
                             f"{sorted({k.flow_id for k in terms.cyclic})} enter through its source")
    return SubpathServiceCurve(terms.key, terms.rate, terms.constant)


def e2e_service_curve(net: RingNetwork, flow: Flow, n: int, bursts: Mapping[SubpathKey, float],
                      policy: Policy = Policy.ARBITRARY) -> SubpathServiceCurve:
    """Service curve of the n-hop subpath of ``flow`` given the bursts of the cyclic interferers.

    Args:
        net: the ring
        flow: flow of interest
        n: hop count
        bursts: solved burst vector
        policy: multiplexing policy

    Returns:
        Rate-latency service curve of the subpath
    """
    terms = subpath_latency_terms(net, flow, n, policy)
    return SubpathServiceCurve(terms.key, terms.rate, terms.latency(bursts))


def delay_bound(flow: Flow, curve: SubpathServiceCurve) -> DelayBound:
    """``sigma0 / rate + latency`` for ``flow`` served by ``curve``."""
    alpha = TokenBucketCurve(flow.sigma0, flow.rho)
    return DelayBound(curve.key, horizontal_deviation(alpha, curve.as_rate_latency()))


def output_arrival(flow: Flow, curve: SubpathServiceCurve) -> TokenBucketCurve:
    """Arrival curve of ``flow`` at the exit of the subpath served by ``curve``."""
    return deconvolve_output_arrival(TokenBucketCurve(flow.sigma0, flow.rho), curve.as_rate_latency())


def backlog_bound(flow: Flow, curve: SubpathServiceCurve) -> float:
    """Largest amount of ``flow`` data held inside the subpath served by ``curve``."""
    return vertical_deviation(TokenBucketCurve(flow.sigma0, flow.rho), curve.as_rate_latency())
