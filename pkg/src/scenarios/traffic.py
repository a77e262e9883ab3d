from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Tuple

from config import (
    DEFAULT_FRAME_OVERHEAD_BYTES,
    DEFAULT_LINK_RATE_BPS,
    DEFAULT_NODE_LATENCY_S,
    TRAFFIC_CLASSES,
)
from pmoo import Policy


@dataclass(frozen=True)
class TrafficClass:
    """Periodic traffic class sent by every node of a broadcast ring.

    Args:
        name: class name (HRT, SRT, NRT)
        payload_bytes: frame payload
        rate_kbps: rate of one flow
        priority: 0 is the highest
    """
    name: str
    payload_bytes: int
    rate_kbps: float
    priority: int

    def __post_init__(self):
        if self.payload_bytes <= 0:
            raise ValueError(f"class {self.name}: payload must be > 0")
        if self.rate_kbps <= 0:
            raise ValueError(f"class {self.name}: rate must be > 0")

    def frame_bits(self, overhead_bytes: int = DEFAULT_FRAME_OVERHEAD_BYTES) -> float:
        """Frame length on the wire, payload plus overhead, in bits."""
        return (self.payload_bytes + overhead_bytes) * 8.0

    @property
    def rate_bps(self) -> float:
        return self.rate_kbps * 1000.0


CLASSES = {name: TrafficClass(name, *values) for name, values in TRAFFIC_CLASSES.items()}
HRT = CLASSES["HRT"]
SRT = CLASSES["SRT"]
NRT = CLASSES["NRT"]

SWEEP_PARAMETERS = ("burst", "load", "nodes")


class ScenarioPoint(NamedTuple):
    """One network of a sweep: ring size, optional load override and optional burst override (bytes)."""
    nodes: int
    load: Optional[float]
    burst_bytes: Optional[float]


@dataclass(frozen=True)
class ScenarioConfig:
    """A sweep over broadcast rings.

    Args:
        scenario_id: 1..4
        nodes: ring size when the sweep is not over ring sizes
        sweep_parameter: "burst" (bytes), "load" (fraction of the link rate) or "nodes"
        sweep: swept values, strictly increasing
        classes: traffic classes sent by every node
        policy: multiplexing policy at the nodes
        link_rate: node rate in bits/second
        node_latency: node latency in seconds
        overhead_bytes: per-frame overhead added to the payload
        all_flows: report every flow instead of the flows sourced at node 1
    """
    scenario_id: int
    nodes: int
    sweep_parameter: str
    sweep: Tuple[float, ...]
    classes: Tuple[TrafficClass, ...] = (SRT,)
    policy: Policy = Policy.ARBITRARY
    link_rate: float = DEFAULT_LINK_RATE_BPS
    node_latency: float = DEFAULT_NODE_LATENCY_S
    overhead_bytes: int = DEFAULT_FRAME_OVERHEAD_BYTES
    all_flows: bool = False

    def __post_init__(self):
        if self.scenario_id not in (1, 2, 3, 4):
            raise ValueError(f"scenario id must be 1..4, got {self.scenario_id}")
        if self.sweep_parameter not in SWEEP_PARAMETERS:
            raise ValueError(f"sweep parameter must be one of {SWEEP_PARAMETERS}, got {self.sweep_parameter}")
        if not self.sweep:
            raise ValueError("sweep must not be empty")
        if any(b <= a for a, b in zip(self.sweep, self.sweep[1:])):
            raise ValueError("sweep values must be strictly increasing")
        if not self.classes:
            raise ValueError("at least one traffic class is needed")

    def points(self) -> Iterator[ScenarioPoint]:
        for value in self.sweep:
            if self.sweep_parameter == "burst":
                yield ScenarioPoint(self.nodes, None, value)
            elif self.sweep_parameter == "load":
                yield ScenarioPoint(self.nodes, value, None)
            else:
                yield ScenarioPoint(int(value), None, None)


def default_scenario(scenario_id: int, all_flows: bool = False) -> ScenarioConfig:
    """The four case-study scenarios.

    1. 35 nodes, SRT only, burst from 166 to 1500 bytes.
    2. 10 nodes, SRT only, load from 10% to 100% by 10%.
    3. SRT only, 10 to 100 nodes by 10.
    4. All three classes under fixed priority, 10 to 100 nodes by 10.
    """
    ring_sizes = tuple(range(10, 101, 10))
    if scenario_id == 1:
        return ScenarioConfig(1, 35, "burst", (166, 250, 500, 750, 1000, 1250, 1500), all_flows=all_flows)
    if scenario_id == 2:
        loads = tuple(round(0.1 * step, 10) for step in range(1, 11))
        return ScenarioConfig(2, 10, "load", loads, all_flows=all_flows)
    if scenario_id == 3:
        return ScenarioConfig(3, 10, "nodes", ring_sizes, all_flows=all_flows)
    if scenario_id == 4:
        return ScenarioConfig(4, 10, "nodes", ring_sizes, classes=(HRT, SRT, NRT), policy=Policy.FP,
                              all_flows=all_flows)
    raise ValueError(f"scenario id must be 1..4, got {scenario_id}")
