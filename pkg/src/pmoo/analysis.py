import logging
from typing import Dict, Mapping, Optional

from model import RingNetwork
from pmoo.matrix_system import MatrixSystem, build_matrix_system, solve_system
from pmoo.service_curves import delay_bound
from pmoo.subpath import DelayBound, Policy, SubpathKey, SubpathServiceCurve

logger = logging.getLogger(__name__)


def ring_pmoo_analysis(net: RingNetwork, policy: Policy = Policy.ARBITRARY,
                       system: Optional[MatrixSystem] = None) -> Dict[SubpathKey, DelayBound]:
    """Delay bound of every flow after each of its hops.

    Solves the latency/burst system once, then bounds each subpath with its own
    end-to-end service curve.

    Args:
        net: the ring
        policy: multiplexing policy
        system: the system of ``net`` if already built

    Raises:
        Infeasible: if the system has no finite non-negative solution
    """
    if system is None:
        system = build_matrix_system(net, policy)
    latencies, _ = solve_system(system)
    bounds = bounds_from_latencies(net, system, latencies)
    logger.debug(f"Ring-PMOO bounds computed for {len(bounds)} subpaths")
    return bounds


def bounds_from_latencies(net: RingNetwork, system: MatrixSystem,
                          latencies: Mapping[SubpathKey, float]) -> Dict[SubpathKey, DelayBound]:
    bounds = {}
    for row, key in enumerate(system.keys):
        curve = SubpathServiceCurve(key, float(system.rates[row]), latencies[key])
        bounds[key] = delay_bound(net.flow(key.flow_id), curve)
    return bounds
