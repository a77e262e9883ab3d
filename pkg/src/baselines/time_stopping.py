"""Time Stopping: node-by-node analysis with the entry bursts treated as unknowns.

Each node serves its priority levels in order and the flows of one level in
FIFO order. The aggregate of level p at node k is then delayed by at most

    D[k, p] = T + (S[k, p] + L + rho_high * T) / (R - rho_high)

where S[k, p] sums the bursts entering k of the flows at levels up to p, L is
the largest lower-priority frame and rho_high the rate of the strictly higher
levels. A flow leaves k with its burst grown by rho * D[k, p]. The bursts
entering each node are unknown on a ring, so the sums S solve a linear system.
The bound of a flow at a node is the left-over service delay of the node for
that flow given the solved bursts, and the end-to-end bound adds them up.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, NamedTuple, Optional, Tuple

import numpy as np

from config import REL_TOL
from linalg import DenseMatrix, determinant, solve
from model import Flow, RingNetwork
from pmoo import DelayBound, Policy, SubpathKey
from utils.errors import NegativeSolution, UnstableSubpath

logger = logging.getLogger(__name__)


class _Hop(NamedTuple):
    node: int
    unknown: int
    rate: float
    latency: float
    burst: float
    burst_coefficients: np.ndarray


@dataclass(frozen=True)
class BurstSystem:
    """Aggregate burst equations ``(Id - G) S = A``.

    Unknown ``S[k * L + p]`` is the sum of the bursts entering node k of the flows
    with priority level at most p (L levels; a single level without priorities).
    """
    matrix: DenseMatrix
    constant: np.ndarray
    levels: Tuple[int, ...]

    def determinant(self) -> float:
        return determinant(self.matrix)


class _Walker:
    """Follows each flow hop by hop, keeping its input burst as an affine function of S."""

    def __init__(self, net: RingNetwork, policy: Policy):
        self.net = net
        self.policy = policy
        self.levels = (net.priority_levels or (0,)) if policy is Policy.FP else (0,)
        self.unknowns = net.size * len(self.levels)

        # per node and level: rate of the flows at or above the level, largest frame below it
        crossing = net.crossing_matrix()
        rho = np.array([f.rho for f in net.flows])
        frames = np.array([f.max_frame for f in net.flows])
        flow_levels = np.array([self.level(f) for f in net.flows], dtype=int)
        self.level_rate = np.zeros((net.size, len(self.levels)))
        self.lower_frame = np.zeros((net.size, len(self.levels)))
        for q in range(len(self.levels)):
            upper = flow_levels <= q
            self.level_rate[:, q] = rho[upper] @ crossing[upper]
            below = ~upper
            if below.any():
                self.lower_frame[:, q] = np.max(np.where(crossing[below], frames[below, np.newaxis], 0.0), axis=0)

    def level(self, flow: Flow) -> int:
        return self.levels.index(flow.priority) if self.policy is Policy.FP else 0

    def hops(self, flow: Flow) -> Iterator[_Hop]:
        level = self.level(flow)
        burst = flow.sigma0
        coefficients = np.zeros(self.unknowns)
        for node in self.net.path(flow):
            base = self.net.node(node)
            cross_rate = self.level_rate[node - 1, level] - flow.rho
            frame = self.lower_frame[node - 1, level]
            rate = base.rate - cross_rate
            if rate <= 0:
                raise UnstableSubpath(f"flow {flow.flow_id}: no residual rate at node {node}")
            latency = base.latency + (cross_rate * base.latency + frame) / rate
            unknown = (node - 1) * len(self.levels) + level
            yield _Hop(node, unknown, rate, latency, burst, coefficients)

            # aggregate delay of the level: level_latency + S[unknown] / level_service
            higher_rate = self.level_rate[node - 1, level - 1] if level > 0 else 0.0
            level_service = base.rate - higher_rate
            level_latency = base.latency + (higher_rate * base.latency + frame) / level_service
            burst = burst + flow.rho * level_latency
            coefficients = coefficients.copy()
            coefficients[unknown] += flow.rho / level_service


def build_burst_system(net: RingNetwork, policy: Policy = Policy.ARBITRARY) -> BurstSystem:
    """Assemble the aggregate burst equations of ``net``.

    Raises:
        UnstableSubpath: if a flow has no residual rate at some node
    """
    walker = _Walker(net, policy)
    levels = len(walker.levels)
    coupling = np.zeros((walker.unknowns, walker.unknowns))
    constant = np.zeros(walker.unknowns)
    for flow in net.flows:
        for hop in walker.hops(flow):
            first = hop.unknown
            last = (hop.node - 1) * levels + levels
            coupling[first:last] += hop.burst_coefficients
            constant[first:last] += hop.burst
    return BurstSystem(DenseMatrix(np.eye(walker.unknowns) - coupling), constant, walker.levels)


def time_stopping_analysis(net: RingNetwork, policy: Policy = Policy.ARBITRARY,
                           system: Optional[BurstSystem] = None) -> Dict[SubpathKey, DelayBound]:
    """Additive per-node delay bound of every flow after each of its hops.

    Args:
        net: the ring
        policy: multiplexing policy
        system: the burst system of ``net`` if already built

    Raises:
        Infeasible: if the burst system is singular or solves to negative bursts
    """
    if not net.flows:
        return {}
    if system is None:
        system = build_burst_system(net, policy)
    sums = solve(system.matrix, system.constant)
    scale = float(np.max(np.abs(sums), initial=0.0))
    if np.any(sums < -REL_TOL * scale):
        raise NegativeSolution("aggregate burst system solved to negative bursts")

    walker = _Walker(net, policy)
    bounds = {}
    for flow in net.flows:
        total = 0.0
        for n, hop in enumerate(walker.hops(flow), start=1):
            if hop.burst + hop.burst_coefficients @ sums < -REL_TOL * max(scale, flow.sigma0):
                raise NegativeSolution(f"flow {flow.flow_id}: negative burst at node {hop.node}")
            # delay of the whole competing aggregate through the left-over service
            total += hop.latency + sums[hop.unknown] / hop.rate
            key = SubpathKey(flow.flow_id, n)
            bounds[key] = DelayBound(key, total)
    logger.debug(f"Time Stopping bounds computed for {len(bounds)} subpaths")
    return bounds
