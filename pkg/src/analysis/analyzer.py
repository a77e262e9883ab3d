import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from baselines import (
    MethodTag,
    backlog_based_analysis,
    build_burst_system,
    time_stopping_analysis,
    wcd_lower_bound,
)
from model import RingNetwork
from pmoo import (
    Policy,
    SubpathKey,
    build_matrix_system,
    ring_pmoo_analysis,
    system_determinant,
)
from utils.error_handler import error_handler
from utils.errors import Infeasible, UnstableNode
from utils.monitoring import monitoring


@dataclass
class AnalysisResult:
    """Bounds of one method on one network.

    ``bounds`` maps every subpath to its delay bound in seconds; it is empty when
    the method found the network infeasible. ``determinant`` is the determinant
    of the method's linear system, None for closed-form methods or when the
    system could not be built.
    """
    method: MethodTag
    feasible: bool
    bounds: Dict[SubpathKey, float] = field(default_factory=dict)
    determinant: Optional[float] = None
    reason: str = ""

    def bound(self, key: SubpathKey) -> float:
        """Delay bound of ``key``, ``math.inf`` when infeasible."""
        return self.bounds[key] if self.feasible else math.inf


class Analyzer:
    """Runs the delay analyses of a ring network.

    This class coordinates the four methods: Ring-PMOO, Time Stopping,
    Backlog-based and the WCD lower bound. Infeasibility is a result, not an
    error: it comes back as an AnalysisResult with ``feasible=False``.
    """

    def __init__(self):
        """Initialize the Analyzer."""
        self.logger = logging.getLogger(__name__)
        self._runners = {
            MethodTag.RING_PMOO: self._run_ring_pmoo,
            MethodTag.TIME_STOPPING: self._run_time_stopping,
            MethodTag.BACKLOG_BASED: self._run_backlog_based,
            MethodTag.WCD_LOWER: self._run_wcd_lower,
        }

    @monitoring.time_function("analyze")
    def analyze(self, net: RingNetwork, methods: Optional[Iterable[MethodTag]] = None,
                policy: Policy = Policy.ARBITRARY) -> List[AnalysisResult]:
        """Run the requested methods on ``net``.

        Args:
            net: the ring network
            methods: methods to run, all four by default, in MethodTag order
            policy: multiplexing policy at the nodes

        Returns:
            One AnalysisResult per method, in the requested order
        """
        methods = list(MethodTag) if methods is None else list(methods)
        return [self.analyze_method(net, method, policy) for method in methods]

    def analyze_method(self, net: RingNetwork, method: MethodTag,
                       policy: Policy = Policy.ARBITRARY) -> AnalysisResult:
        """Run one method on ``net``, turning infeasibility into a result.

        Args:
            net: the ring network
            method: the method to run
            policy: multiplexing policy at the nodes

        Returns:
            AnalysisResult of the method
        """
        monitoring.log_activity("analysis_started", {
            "method": method.value,
            "policy": policy.value,
            "nodes": net.size,
            "flows": len(net.flows),
        })
        holder = {}
        try:
            bounds = self._runners[method](net, policy, holder)
        except (Infeasible, UnstableNode) as e:
            error_handler.handle_error(e, {"method": method.value, "network": repr(net)})
            monitoring.log_activity("analysis_infeasible", {
                "method": method.value,
                "error_type": type(e).__name__,
                "reason": str(e),
            })
            return AnalysisResult(method, False, determinant=holder.get("determinant"), reason=str(e))

        if any(math.isinf(b) for b in bounds.values()):
            monitoring.log_activity("analysis_infeasible", {"method": method.value, "reason": "unbounded node"})
            return AnalysisResult(method, False, determinant=holder.get("determinant"), reason="unbounded node")

        monitoring.log_activity("analysis_completed", {
            "method": method.value,
            "subpaths": len(bounds),
            "determinant": holder.get("determinant"),
        })
        return AnalysisResult(method, True, bounds, holder.get("determinant"))

    def _run_ring_pmoo(self, net: RingNetwork, policy: Policy, holder: dict) -> Dict[SubpathKey, float]:
        system = build_matrix_system(net, policy)
        holder["determinant"] = system_determinant(system)
        self.logger.debug(f"Ring-PMOO system determinant: {holder['determinant']}")
        return {key: b.bound for key, b in ring_pmoo_analysis(net, policy, system).items()}

    def _run_time_stopping(self, net: RingNetwork, policy: Policy, holder: dict) -> Dict[SubpathKey, float]:
        system = build_burst_system(net, policy)
        holder["determinant"] = system.determinant()
        self.logger.debug(f"Time Stopping system determinant: {holder['determinant']}")
        return {key: b.bound for key, b in time_stopping_analysis(net, policy, system).items()}

    def _run_backlog_based(self, net: RingNetwork, policy: Policy, holder: dict) -> Dict[SubpathKey, float]:
        # aggregate bound, independent of the multiplexing policy
        return {key: b.bound for key, b in backlog_based_analysis(net).items()}

    def _run_wcd_lower(self, net: RingNetwork, policy: Policy, holder: dict) -> Dict[SubpathKey, float]:
        return {key: b.bound for key, b in wcd_lower_bound(net, policy).items()}

# Create a singleton instance
analyzer = Analyzer()
