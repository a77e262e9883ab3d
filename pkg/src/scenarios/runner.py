import logging
import math
from typing import Iterable, List, Optional, Sequence

from analysis import AnalysisResult, Analyzer, analyzer as default_analyzer
from baselines import MethodTag
from config import (
    DEFAULT_FRAME_OVERHEAD_BYTES,
    DEFAULT_LINK_RATE_BPS,
    DEFAULT_NODE_LATENCY_S,
    FRONTIER_RESOLUTION,
)
from model import Flow, RingNetwork
from pmoo import Policy, SubpathKey
from scenarios.generator import build_broadcast_ring, class_of
from scenarios.report import ReportRow
from scenarios.traffic import SRT, ScenarioConfig, TrafficClass
from utils.error_handler import error_handler
from utils.errors import RingAnalysisError
from utils.monitoring import monitoring


class ScenarioRunner:
    """Runs scenario sweeps and single-network analyses into report rows."""

    def __init__(self, analyzer: Optional[Analyzer] = None):
        """Initialize the ScenarioRunner.

        Args:
            analyzer: analyzer to use, the shared one by default
        """
        self.logger = logging.getLogger(__name__)
        self.analyzer = analyzer or default_analyzer

    def run_scenario(self, cfg: ScenarioConfig) -> List[ReportRow]:
        """Run all four methods at every sweep point of ``cfg``.

        Rows are ordered by sweep point, then method, then flow. A point that
        cannot be analysed yields INF rows; the sweep always completes.
        """
        rows = []
        for point in cfg.points():
            net = build_broadcast_ring(point.nodes, cfg.classes, cfg.overhead_bytes, point.load,
                                       cfg.link_rate, cfg.node_latency, point.burst_bytes)
            flows = net.flows if cfg.all_flows else [f for f in net.flows if f.source == 1]
            point_rows = self.analyze_rows(net, flows, list(MethodTag), cfg.policy, str(cfg.scenario_id),
                                           [class_of(f, cfg.classes).name for f in flows])
            monitoring.log_activity("scenario_point", {
                "scenario": cfg.scenario_id,
                "M": point.nodes,
                "load": point.load,
                "burst_bytes": point.burst_bytes,
                "stable": {row.method: row.stable for row in point_rows},
            })
            rows.extend(point_rows)
        self.logger.info(f"Scenario {cfg.scenario_id}: {len(rows)} rows")
        return rows

    def analyze_rows(self, net: RingNetwork, flows: Sequence[Flow], methods: Iterable[MethodTag],
                     policy: Policy, scenario: str = "custom",
                     class_names: Optional[Sequence[str]] = None) -> List[ReportRow]:
        """Full-loop bound of each flow in ``flows`` under each method, one row each.

        Args:
            net: the ring
            flows: reported flows, each bounded over its whole path
            methods: methods to run
            policy: multiplexing policy
            scenario: value of the scenario column
            class_names: traffic class of each flow, ``P<priority>`` by default
        """
        if class_names is None:
            class_names = [f"P{f.priority}" for f in flows]
        load_pct = round(max(net.node_utilization()) * 100.0, 6)

        rows = []
        for method in methods:
            result = self._analyze(net, method, policy)
            for flow, class_name in zip(flows, class_names):
                bound = result.bound(SubpathKey(flow.flow_id, flow.hops))
                rows.append(ReportRow(
                    method=method.value,
                    scenario=scenario,
                    M=net.size,
                    load_pct=load_pct,
                    burst_bytes=flow.sigma0 / 8.0,
                    traffic_class=class_name,
                    flow_id=flow.flow_id,
                    hops=flow.hops,
                    delay_bound_s=bound,
                    stable=not math.isinf(bound),
                    det_margin=result.determinant,
                ))
        return rows

    def _analyze(self, net: RingNetwork, method: MethodTag, policy: Policy) -> AnalysisResult:
        try:
            return self.analyzer.analyze_method(net, method, policy)
        except RingAnalysisError as e:
            error_handler.handle_error(e, {"method": method.value, "network": repr(net)})
            return AnalysisResult(method, False, reason=str(e))

    def find_load_frontier(
        self,
        nodes: int,
        method: MethodTag,
        policy: Policy = Policy.ARBITRARY,
        resolution: float = FRONTIER_RESOLUTION,
        classes: Sequence[TrafficClass] = (SRT,),
        link_rate: float = DEFAULT_LINK_RATE_BPS,
        node_latency: float = DEFAULT_NODE_LATENCY_S,
        overhead_bytes: int = DEFAULT_FRAME_OVERHEAD_BYTES,
    ) -> float:
        """Largest broadcast-ring load at which ``method`` still gives finite bounds.

        Bisection on the load (fraction of the link rate) in (0, 1]; the result
        is within ``resolution`` below the true frontier. Returns 1.0 when the
        method is feasible at full load and 0.0 when it is infeasible at
        ``resolution``.
        """
        def feasible(load: float) -> bool:
            net = build_broadcast_ring(nodes, classes, overhead_bytes, load, link_rate, node_latency)
            return self._analyze(net, method, policy).feasible

        if feasible(1.0):
            return 1.0
        low, high = resolution, 1.0
        if not feasible(low):
            return 0.0
        while high - low > resolution:
            mid = 0.5 * (low + high)
            if feasible(mid):
                low = mid
            else:
                high = mid
        self.logger.info(f"{method.value} frontier at M={nodes}: {low:.6f}")
        return low

# Create a singleton instance
scenario_runner = ScenarioRunner()


def run_scenario(cfg: ScenarioConfig) -> List[ReportRow]:
    """Run ``cfg`` with the shared runner."""
    return scenario_runner.run_scenario(cfg)


def find_load_frontier(nodes: int, method: MethodTag, policy: Policy = Policy.ARBITRARY,
                       resolution: float = FRONTIER_RESOLUTION) -> float:
    """Frontier of the SRT broadcast ring with the shared runner."""
    return scenario_runner.find_load_frontier(nodes, method, policy, resolution)
