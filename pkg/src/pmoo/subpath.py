"""Per-subpath result types shared by the ring analyses."""

from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, NamedTuple, Tuple

from curves import RateLatencyCurve
from model import FlowId, RingNetwork


class Policy(Enum):
    """Multiplexing policy at the ring nodes."""
    ARBITRARY = "arbitrary"
    FP = "fp"


class SubpathKey(NamedTuple):
    """A flow and a hop count n: the subpath made of the flow's first n nodes."""
    flow_id: FlowId
    n: int


@dataclass(frozen=True)
class SubpathServiceCurve:
    """Rate-latency service offered to a flow along one of its subpaths."""
    key: SubpathKey
    rate: float
    latency: float

    def as_rate_latency(self) -> RateLatencyCurve:
        return RateLatencyCurve(self.rate, self.latency)


@dataclass(frozen=True)
class DelayBound:
    """Worst-case delay of a flow after crossing the nodes of a subpath, in seconds."""
    key: SubpathKey
    bound: float


@dataclass(frozen=True)
class LatencyTerms:
    """Latency of a subpath service curve split into its constant and burst-dependent parts.

    The latency is ``constant + sum(bursts[k] for k in cyclic) / rate``; ``cyclic``
    lists the bursts with which interferers enter the source node of the flow.
    """
    key: SubpathKey
    rate: float
    constant: float
    cyclic: Tuple[SubpathKey, ...]

    def latency(self, bursts: Mapping[SubpathKey, float]) -> float:
        return self.constant + sum(bursts[key] for key in self.cyclic) / self.rate


class BurstVector(Mapping):
    """Read-only map from ``(flow, m)`` to the burst of the flow after m hops.

    Entry ``(i, 0)`` is the initial burst of flow i.
    """

    def __init__(self, entries: Mapping[SubpathKey, float]):
        self._entries = MappingProxyType(dict(entries))

    @classmethod
    def initial(cls, net: RingNetwork) -> "BurstVector":
        """Every entry set to the flow's initial burst."""
        return cls({
            SubpathKey(f.flow_id, m): f.sigma0 for f in net.flows for m in range(f.hops + 1)
        })

    def __getitem__(self, key: SubpathKey) -> float:
        return self._entries[key]

    def __iter__(self) -> Iterator[SubpathKey]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def as_dict(self) -> Dict[SubpathKey, float]:
        return dict(self._entries)

    def __repr__(self):
        return f"<BurstVector: {len(self)} entries>"
