"""Small ring networks shared by the tests."""

import random
from typing import Optional

from model import Flow, Node, RingNetwork

RATE = 100.0
LATENCY = 0.01


def ring(size: int, flows, rate: float = RATE, latency: float = LATENCY) -> RingNetwork:
    return RingNetwork([Node(k, rate, latency) for k in range(1, size + 1)], flows)


def two_node_ring(sigma: float = 1.0, rho: float = 10.0, latency: float = LATENCY) -> RingNetwork:
    return ring(2, [Flow(1, 1, 2, rho, sigma), Flow(2, 2, 2, rho, sigma)], latency=latency)


def feedforward_ring() -> RingNetwork:
    return ring(4, [
        Flow(1, 1, 3, 10.0, 1.0),
        Flow(2, 1, 2, 5.0, 2.0),
        Flow(3, 1, 1, 5.0, 1.0),
    ])


def broadcast_x(size: int, rho: float, rate: float = RATE) -> float:
    return rho / (rate - (size - 1) * rho)


def broadcast_ring(size: int, rho: Optional[float] = None, rho_factor: Optional[float] = None,
                   sigma: float = 1.0) -> RingNetwork:
    """One full-loop flow per node.

    With ``rho_factor`` the rate is chosen so that (M - 1) x equals the factor,
    1 being the stability threshold.
    """
    if rho is None:
        x = rho_factor / (size - 1)
        rho = x * RATE / (1 + (size - 1) * x)
    return ring(size, [Flow(k, k, size, rho, sigma) for k in range(1, size + 1)])


def random_ring(rng: random.Random, max_nodes: int = 8, max_flows: int = 8,
                priorities: bool = False) -> RingNetwork:
    """Random ring whose burst coupling is a contraction.

    Every rate is at most 0.4 R / (I - 1), so each subpath keeps 60% of R and
    the coupling weights of a flow sum to at most 2/3.
    """
    size = rng.randint(2, max_nodes)
    count = rng.randint(1, max_flows)
    rho_cap = 0.4 * RATE / max(count - 1, 1)
    flows = [
        Flow(
            flow_id=fid,
            source=rng.randint(1, size),
            hops=rng.randint(1, size),
            rho=rng.uniform(0.05, 1.0) * rho_cap,
            sigma0=rng.uniform(1.0, 10.0),
            priority=rng.randint(0, 2) if priorities else 0,
            max_frame=rng.uniform(0.0, 2.0) if priorities else 0.0,
        )
        for fid in range(1, count + 1)
    ]
    nodes = [Node(k, RATE, rng.uniform(0.0, LATENCY)) for k in range(1, size + 1)]
    return RingNetwork(nodes, flows)


def random_feedforward_ring(rng: random.Random) -> RingNetwork:
    """Same-source flows on equal-rate nodes."""
    size = rng.randint(2, 6)
    count = rng.randint(1, 5)
    flows = [
        Flow(fid, 1, rng.randint(1, size), rng.uniform(0.5, 5.0), rng.uniform(1.0, 10.0))
        for fid in range(1, count + 1)
    ]
    nodes = [Node(k, RATE, rng.uniform(0.001, LATENCY)) for k in range(1, size + 1)]
    return RingNetwork(nodes, flows)
