#!/usr/bin/env python
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add the parent directory to the path so we can import the modules
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from baselines import MethodTag
from config import FRONTIER_RESOLUTION, RESULTS_DIR
from model import RingNetwork
from pmoo import Policy, broadcast_stability, build_matrix_system, system_determinant
from scenarios.loader import load_network
from scenarios.report import REPORT_FORMATS, emit_report, rows_to_frame
from scenarios.runner import scenario_runner
from scenarios.traffic import default_scenario
from utils.error_handler import EXIT_INFEASIBLE, EXIT_OK, error_handler
from utils.errors import Infeasible, RingAnalysisError, UnstableNode
from utils.monitoring import monitoring

logger = logging.getLogger(__name__)


def _method_list(value: str) -> List[MethodTag]:
    if value.lower() == "all":
        return list(MethodTag)
    return [MethodTag.parse(tag) for tag in value.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Worst-case delay analysis of unidirectional ring networks")
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Enable verbose logging"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", help="Bound the delay of every flow of a JSON network")
    analyze.add_argument("--config", required=True, help="Path to the JSON network description")
    analyze.add_argument(
        "--method",
        default="all",
        help="Method tag, comma-separated tags, or 'all' (RING_PMOO, TIME_STOPPING, BACKLOG_BASED, WCD_LOWER)"
    )
    analyze.add_argument("--policy", choices=[p.value for p in Policy], default=Policy.ARBITRARY.value,
                         help="Multiplexing policy at the nodes")
    analyze.add_argument("--format", choices=REPORT_FORMATS, default="csv", help="Report format")
    analyze.add_argument("--out", default=None, help="Report file, CSV on stdout when omitted")

    scenario = subparsers.add_parser("scenario", help="Run one of the four broadcast-ring sweeps")
    scenario.add_argument("scenario_id", type=int, choices=[1, 2, 3, 4], help="Scenario number")
    scenario.add_argument("--out", default=str(RESULTS_DIR), help="Output directory")
    scenario.add_argument("--format", choices=REPORT_FORMATS, default="csv", help="Report format")
    scenario.add_argument("--all-flows", action="store_true",
                          help="Report every flow instead of the flows sourced at node 1")

    stability = subparsers.add_parser("stability", help="Check whether the latency/burst system is solvable")
    stability.add_argument("--config", required=True, help="Path to the JSON network description")
    stability.add_argument("--policy", choices=[p.value for p in Policy], default=Policy.ARBITRARY.value,
                           help="Multiplexing policy at the nodes")

    frontier = subparsers.add_parser("frontier", help="Find the largest feasible load of an SRT broadcast ring")
    frontier.add_argument("--nodes", type=int, required=True, help="Ring size")
    frontier.add_argument("--method", required=True, help="Method tag")
    frontier.add_argument("--policy", choices=[p.value for p in Policy], default=Policy.ARBITRARY.value,
                          help="Multiplexing policy at the nodes")
    frontier.add_argument("--resolution", type=float, default=FRONTIER_RESOLUTION,
                          help="Bisection resolution, as a fraction of the link rate")
    return parser


def run_analyze(args) -> int:
    net = load_network(args.config)
    policy = Policy(args.policy)
    rows = scenario_runner.analyze_rows(net, net.flows, _method_list(args.method), policy)
    if args.out:
        emit_report(rows, args.format, args.out)
    else:
        rows_to_frame(rows).to_csv(sys.stdout, index=False, na_rep="")
    return EXIT_OK if all(row.stable for row in rows) else EXIT_INFEASIBLE


def run_scenario_command(args) -> int:
    cfg = default_scenario(args.scenario_id, all_flows=args.all_flows)
    rows = scenario_runner.run_scenario(cfg)
    path = Path(args.out) / f"scenario{args.scenario_id}.{args.format}"
    emit_report(rows, args.format, path)
    print(path)
    return EXIT_OK


def _uniform_broadcast_rho(net: RingNetwork) -> Optional[float]:
    """Common flow rate if ``net`` is a broadcast ring with one flow per node, else None."""
    rates = {node.rate for node in net.nodes}
    sources = sorted(f.source for f in net.flows)
    if (len(rates) != 1 or sources != list(range(1, net.size + 1))
            or any(f.hops != net.size for f in net.flows) or len({f.rho for f in net.flows}) != 1):
        return None
    return net.flows[0].rho


def run_stability(args) -> int:
    net = load_network(args.config)
    policy = Policy(args.policy)
    for node, utilization in zip(net.nodes, net.node_utilization()):
        print(f"node {node.index}: utilization {utilization:.6f}")

    rho = _uniform_broadcast_rho(net)
    if rho is not None and net.size >= 2:
        try:
            verdict = broadcast_stability(net.size, net.nodes[0].rate, rho)
            print(f"broadcast closed form: stable={verdict.stable} determinant={verdict.determinant:.12g} "
                  f"threshold_rho={verdict.threshold_rho:.12g} margin={verdict.margin:.12g}")
        except UnstableNode as e:
            print(f"broadcast closed form: {e}")

    try:
        system = build_matrix_system(net, policy)
    except Infeasible as e:
        print(f"latency/burst system: infeasible ({e})")
        return EXIT_INFEASIBLE
    determinant = system_determinant(system)
    result = scenario_runner.analyzer.analyze_method(net, MethodTag.RING_PMOO, policy)
    print(f"latency/burst system: determinant={determinant:.12g} feasible={result.feasible}")
    return EXIT_OK if result.feasible else EXIT_INFEASIBLE


def run_frontier(args) -> int:
    method = MethodTag.parse(args.method)
    load = scenario_runner.find_load_frontier(args.nodes, method, Policy(args.policy), args.resolution)
    print(f"{method.value} M={args.nodes}: frontier load {load * 100:.4f}%")
    return EXIT_OK


COMMANDS = {
    "analyze": run_analyze,
    "scenario": run_scenario_command,
    "stability": run_stability,
    "frontier": run_frontier,
}

# failures reported to the operator; anything else propagates
COMMAND_ERRORS = (RingAnalysisError, ValueError, OSError)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point of the ring analysis CLI; returns the exit code."""
    args = build_parser().parse_args(argv)

    # Set logging level based on verbosity
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    monitoring.log_activity("command_started", {"command": args.command})
    command = error_handler.with_error_handling(errors=COMMAND_ERRORS)(COMMANDS[args.command])
    response = command(args)
    if isinstance(response, int):
        return response
    monitoring.log_activity("error", {"command": args.command, "error_type": response["error_type"]})
    print(response["user_message"], file=sys.stderr)
    return response["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
