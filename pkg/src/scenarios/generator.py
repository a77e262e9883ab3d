import logging
from typing import Optional, Sequence

from config import DEFAULT_FRAME_OVERHEAD_BYTES, DEFAULT_LINK_RATE_BPS, DEFAULT_NODE_LATENCY_S
from model import Flow, Node, RingNetwork
from scenarios.traffic import TrafficClass
from utils.errors import DegenerateRing

logger = logging.getLogger(__name__)


def build_broadcast_ring(
    nodes: int,
    classes: Sequence[TrafficClass],
    overhead_bytes: int = DEFAULT_FRAME_OVERHEAD_BYTES,
    load_override: Optional[float] = None,
    link_rate: float = DEFAULT_LINK_RATE_BPS,
    node_latency: float = DEFAULT_NODE_LATENCY_S,
    burst_bytes: Optional[float] = None,
) -> RingNetwork:
    """Ring where every node sends one full-loop flow per traffic class.

    Flow ids are node-major: the flow of class c (0-based) sourced at node k has
    id ``(k - 1) * len(classes) + c + 1``, so the flows sourced at node 1 come first.

    Args:
        nodes: ring size M
        classes: traffic classes sent by each node
        overhead_bytes: added to the payload to get the frame length
        load_override: if set, all rates are scaled so every node carries this fraction of the link rate
        link_rate: node rate in bits/second
        node_latency: node latency in seconds
        burst_bytes: if set, the initial burst of every flow, instead of one frame

    Returns:
        The validated ring network

    Raises:
        DegenerateRing: if nodes < 2
    """
    if nodes < 2:
        raise DegenerateRing(f"a broadcast ring needs at least 2 nodes, got {nodes}")

    scale = 1.0
    if load_override is not None:
        if not 0 < load_override <= 1:
            raise ValueError(f"load must be in (0, 1], got {load_override}")
        per_node = nodes * sum(c.rate_bps for c in classes)
        scale = load_override * link_rate / per_node

    ring_nodes = [Node(k, link_rate, node_latency) for k in range(1, nodes + 1)]
    flows = []
    for k in range(1, nodes + 1):
        for c, traffic in enumerate(classes):
            frame = traffic.frame_bits(overhead_bytes)
            flows.append(Flow(
                flow_id=(k - 1) * len(classes) + c + 1,
                source=k,
                hops=nodes,
                rho=traffic.rate_bps * scale,
                sigma0=frame if burst_bytes is None else burst_bytes * 8.0,
                priority=traffic.priority,
                max_frame=frame,
            ))
    logger.debug(f"Broadcast ring: M={nodes}, classes={[c.name for c in classes]}, scale={scale}")
    return RingNetwork(ring_nodes, flows)


def class_of(flow: Flow, classes: Sequence[TrafficClass]) -> TrafficClass:
    """Traffic class of a flow built by build_broadcast_ring."""
    return classes[(flow.flow_id - 1) % len(classes)]
