import logging
from typing import Dict

from curves import TokenBucketCurve, horizontal_deviation
from model import RingNetwork
from pmoo import DelayBound, Policy, SubpathKey, build_matrix_system
from pmoo.subpath import SubpathServiceCurve

logger = logging.getLogger(__name__)


def wcd_lower_bound(net: RingNetwork, policy: Policy = Policy.ARBITRARY) -> Dict[SubpathKey, DelayBound]:
    """Delay of every subpath counting only the direct interference met on it.

    The subpath latency keeps every initial burst and rate term but drops the
    bursts that interferers carry into the source node of the flow.

    Raises:
        UnstableSubpath: if some subpath has no residual rate
    """
    system = build_matrix_system(net, policy)
    bounds = {}
    for row, key in enumerate(system.keys):
        flow = net.flow(key.flow_id)
        curve = SubpathServiceCurve(key, float(system.rates[row]), float(system.c1[row]))
        bound = horizontal_deviation(TokenBucketCurve(flow.sigma0, flow.rho), curve.as_rate_latency())
        bounds[key] = DelayBound(key, bound)
    logger.debug(f"WCD lower bounds computed for {len(bounds)} subpaths")
    return bounds
