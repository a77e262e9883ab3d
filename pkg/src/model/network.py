import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from config import REL_TOL
from model.ring import ring_add, ring_sub, ring_distance
from utils.errors import InvalidHopCount, NetworkValidationError, NotAnInterferer

FlowId = int


@dataclass(frozen=True)
class Node:
    """A ring node offering a strict rate-latency service.

    Args:
        index: position on the ring, 1..M
        rate: service rate R^k in bits/second
        latency: service latency T^k in seconds
    """
    index: int
    rate: float
    latency: float

    def __post_init__(self):
        if not (self.rate > 0 and math.isfinite(self.rate)):
            raise NetworkValidationError(f"node {self.index}: rate must be finite and > 0, got {self.rate}",
                                         field=f"nodes[{self.index - 1}].rate_bps")
        if not (self.latency >= 0 and math.isfinite(self.latency)):
            raise NetworkValidationError(f"node {self.index}: latency must be finite and >= 0, got {self.latency}",
                                         field=f"nodes[{self.index - 1}].latency_s")


@dataclass(frozen=True)
class Flow:
    """A token-bucket constrained flow following a fixed ring path.

    Args:
        flow_id: identifier, unique in the network
        source: first node crossed
        hops: number of nodes crossed, 1..M
        rho: long-term rate in bits/second
        sigma0: initial burst in bits
        priority: priority level, 0 is the highest
        max_frame: largest frame in bits, used for non-preemptive blocking
    """
    flow_id: FlowId
    source: int
    hops: int
    rho: float
    sigma0: float
    priority: int = 0
    max_frame: float = 0.0

    def __post_init__(self):
        checks = (
            ("rho_bps", self.rho >= 0 and math.isfinite(self.rho), "rate must be finite and >= 0"),
            ("sigma0_bits", self.sigma0 >= 0 and math.isfinite(self.sigma0), "burst must be finite and >= 0"),
            ("priority", self.priority >= 0, "priority must be >= 0"),
            ("max_frame_bits", self.max_frame >= 0 and math.isfinite(self.max_frame),
             "max frame must be finite and >= 0"),
            ("hops", self.hops >= 1, "hops must be >= 1"),
        )
        for field, ok, message in checks:
            if not ok:
                raise NetworkValidationError(f"flow {self.flow_id}: {message}", field=field)


class InterfererCategory(Enum):
    """How an interfering flow meets the subpath of the flow of interest."""
    SOURCE_ON_SUBPATH = "source_on_subpath"
    CROSSES_F_SOURCE = "crosses_f_source"
    BOTH = "both"


class RingNetwork:
    """Unidirectional ring: node l forwards to node l (+) 1.

    The network is validated on construction and must not be mutated afterwards;
    all queries are pure.
    """

    def __init__(self, nodes: Sequence[Node], flows: Iterable[Flow]):
        """Build and validate a ring network.

        Args:
            nodes: the M nodes, in ring order, indexed 1..M
            flows: the flows crossing the ring

        Raises:
            NetworkValidationError: on bad indices, paths, duplicate ids or overloaded nodes
        """
        self.logger = logging.getLogger(__name__)
        self.nodes: Tuple[Node, ...] = tuple(nodes)
        self.flows: Tuple[Flow, ...] = tuple(sorted(flows, key=lambda f: f.flow_id))
        self._validate_structure()

        self._flows_by_id: Dict[FlowId, Flow] = {f.flow_id: f for f in self.flows}
        self._paths: Dict[FlowId, Tuple[int, ...]] = {
            f.flow_id: tuple(ring_add(f.source, h, self.size) for h in range(f.hops)) for f in self.flows
        }
        self._path_sets: Dict[FlowId, FrozenSet[int]] = {fid: frozenset(p) for fid, p in self._paths.items()}
        self._crossing: Dict[int, Tuple[Flow, ...]] = {
            node.index: tuple(f for f in self.flows if node.index in self._path_sets[f.flow_id])
            for node in self.nodes
        }
        self.priority_levels: Tuple[int, ...] = tuple(sorted({f.priority for f in self.flows}))

        self._validate_utilization()
        self.logger.debug(f"Ring network built: M={self.size}, I={len(self.flows)}, "
                          f"NP={len(self.priority_levels)}")

    def _validate_structure(self):
        if not self.nodes:
            raise NetworkValidationError("a ring needs at least one node", field="nodes")
        for position, node in enumerate(self.nodes, start=1):
            if node.index != position:
                raise NetworkValidationError(f"node at position {position} has index {node.index}",
                                             field=f"nodes[{position - 1}]")
        seen = set()
        for flow in self.flows:
            if flow.flow_id in seen:
                raise NetworkValidationError(f"duplicate flow id {flow.flow_id}", field="id")
            seen.add(flow.flow_id)
            if not 1 <= flow.source <= self.size:
                raise NetworkValidationError(
                    f"flow {flow.flow_id}: source {flow.source} is not a node of the {self.size}-node ring",
                    field="source")
            if not 1 <= flow.hops <= self.size:
                raise NetworkValidationError(
                    f"flow {flow.flow_id}: hops {flow.hops} outside [1, {self.size}]", field="hops")

    def _validate_utilization(self):
        overloaded = [
            (node.index, load) for node, load in zip(self.nodes, self.node_utilization()) if load > 1 + REL_TOL
        ]
        if overloaded:
            detail = ", ".join(f"node {k}: {load:.6f}" for k, load in overloaded)
            raise NetworkValidationError(f"utilization above 1 at {detail}", field="rho_bps")

    @property
    def size(self) -> int:
        """Number of nodes M."""
        return len(self.nodes)

    def node(self, index: int) -> Node:
        return self.nodes[index - 1]

    def flow(self, flow_id: FlowId) -> Flow:
        return self._flows_by_id[flow_id]

    def ring_add(self, node: int, k: int) -> int:
        return ring_add(node, k, self.size)

    def ring_sub(self, node: int, k: int) -> int:
        return ring_sub(node, k, self.size)

    def ring_distance(self, start: int, end: int) -> int:
        return ring_distance(start, end, self.size)

    def path(self, flow: Flow) -> Tuple[int, ...]:
        """All nodes crossed by ``flow``, in order."""
        return self._paths[flow.flow_id]

    def crosses(self, flow: Flow, node: int) -> bool:
        return node in self._path_sets[flow.flow_id]

    def subpath(self, flow: Flow, n: int) -> Tuple[int, ...]:
        """The first ``n`` nodes crossed by ``flow``.

        Raises:
            InvalidHopCount: if n is outside [1, hops]
        """
        if not 1 <= n <= flow.hops:
            raise InvalidHopCount(f"flow {flow.flow_id}: hop count {n} outside [1, {flow.hops}]")
        return self._paths[flow.flow_id][:n]

    def crossing_flows(self, node: int) -> Tuple[Flow, ...]:
        """Flows whose path contains ``node``, ordered by flow id."""
        return self._crossing[node]

    def node_load(self, node: int) -> float:
        """Aggregate rate of the flows crossing ``node``."""
        return sum(f.rho for f in self._crossing[node])

    def node_utilization(self) -> List[float]:
        """Per-node utilization ``sum rho / R``, in node order."""
        return [self.node_load(node.index) / node.rate for node in self.nodes]

    def interference_set(self, flow: Flow, n: int, priority_filter: bool = False) -> Tuple[Flow, ...]:
        """Flows other than ``flow`` sharing a node with its n-hop subpath.

        Args:
            flow: flow of interest
            n: hop count
            priority_filter: keep only flows of higher or equal priority

        Returns:
            Interfering flows ordered by flow id
        """
        nodes = self.subpath(flow, n)
        return tuple(
            other for other in self.flows
            if other.flow_id != flow.flow_id
            and (not priority_filter or other.priority <= flow.priority)
            and not self._path_sets[other.flow_id].isdisjoint(nodes)
        )

    def hp_lp_sets(self, flow: Flow, node: int) -> Tuple[Tuple[Flow, ...], Tuple[Flow, ...]]:
        """Split the other flows at ``node`` into higher-or-equal and strictly lower priority."""
        others = [f for f in self._crossing[node] if f.flow_id != flow.flow_id]
        hp = tuple(f for f in others if f.priority <= flow.priority)
        lp = tuple(f for f in others if f.priority > flow.priority)
        return hp, lp

    def classify_interferer(self, interferer: Flow, flow: Flow, n: int) -> InterfererCategory:
        """Classify how ``interferer`` meets the n-hop subpath of ``flow``.

        Raises:
            NotAnInterferer: if the two flows share no node on the subpath
        """
        nodes = self.subpath(flow, n)
        if interferer.flow_id == flow.flow_id or self._path_sets[interferer.flow_id].isdisjoint(nodes):
            raise NotAnInterferer(f"flow {interferer.flow_id} does not interfere with flow "
                                  f"{flow.flow_id} on its first {n} hops")
        source_on_subpath = interferer.source in nodes
        crosses_source = interferer.source != flow.source and self.crosses(interferer, flow.source)
        if source_on_subpath and crosses_source:
            return InterfererCategory.BOTH
        if source_on_subpath:
            return InterfererCategory.SOURCE_ON_SUBPATH
        return InterfererCategory.CROSSES_F_SOURCE

    def entry_burst_hops(self, interferer: Flow, flow: Flow) -> int:
        """Hops made by ``interferer`` when it reaches the node upstream of ``flow``'s source.

        This is the index m of the burst ``sigma(interferer, m)`` with which the
        interferer enters the source node of ``flow``; 0 means its initial burst.
        """
        if interferer.source == flow.source:
            return 0
        return self.ring_distance(interferer.source, self.ring_sub(flow.source, 1)) + 1

    def crossing_matrix(self) -> np.ndarray:
        """Boolean I x M matrix, True where flow (row, id order) crosses node (column)."""
        matrix = np.zeros((len(self.flows), self.size), dtype=bool)
        for row, flow in enumerate(self.flows):
            matrix[row, [k - 1 for k in self._paths[flow.flow_id]]] = True
        return matrix

    def __repr__(self):
        return f"<RingNetwork: M={self.size}, flows={len(self.flows)}>"
