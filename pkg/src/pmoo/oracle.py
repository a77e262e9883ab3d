"""Picard iteration of the latency/burst equations.

Independent of the matrix assembly and of the linear solver: the latency of
each subpath is evaluated interferer by interferer from the current bursts,
then every burst is refreshed from the new latencies.
"""

import logging

from config import PICARD_DIVERGENCE, PICARD_MAX_ITER, PICARD_TOL
from model import RingNetwork
from pmoo.matrix_system import SystemSolution
from pmoo.service_curves import subpath_latency_terms
from pmoo.subpath import BurstVector, Policy
from utils.errors import Diverged

logger = logging.getLogger(__name__)


def fixed_point_oracle(net: RingNetwork, policy: Policy = Policy.ARBITRARY,
                       tol: float = PICARD_TOL, max_iter: int = PICARD_MAX_ITER) -> SystemSolution:
    """Iterate the subpath latencies and bursts to their fixed point.

    Args:
        net: the ring
        policy: multiplexing policy
        tol: stop when the largest relative change of an entry falls below this
        max_iter: iteration cap

    Returns:
        Latencies and bursts, as solve_system does

    Raises:
        Diverged: if a value exceeds PICARD_DIVERGENCE or the iteration cap is hit
    """
    terms = [
        (flow, subpath_latency_terms(net, flow, n, policy))
        for flow in net.flows for n in range(1, flow.hops + 1)
    ]
    bursts = BurstVector.initial(net).as_dict()
    latencies = {t.key: 0.0 for _, t in terms}

    for iteration in range(1, max_iter + 1):
        new_latencies = {t.key: t.latency(bursts) for _, t in terms}
        new_bursts = dict(bursts)
        for flow, t in terms:
            new_bursts[t.key] = flow.sigma0 + flow.rho * new_latencies[t.key]

        change = max(
            max(_relative_change(latencies[k], v) for k, v in new_latencies.items()),
            max(_relative_change(bursts[k], v) for k, v in new_bursts.items()),
        )
        latencies, bursts = new_latencies, new_bursts

        if max(bursts.values()) > PICARD_DIVERGENCE or max(latencies.values()) > PICARD_DIVERGENCE:
            raise Diverged(f"fixed-point iteration exceeded {PICARD_DIVERGENCE:g} after {iteration} iterations")
        if change < tol:
            logger.debug(f"Fixed point reached after {iteration} iterations")
            return SystemSolution(latencies, BurstVector(bursts))

    raise Diverged(f"fixed-point iteration did not converge in {max_iter} iterations")


def _relative_change(old: float, new: float) -> float:
    if new == old:
        return 0.0
    return abs(new - old) / max(abs(new), abs(old))
