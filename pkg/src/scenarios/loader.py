import json
import logging
import numbers
from pathlib import Path
from typing import Any, Dict, Union

from model import Flow, Node, RingNetwork
from utils.errors import NetworkParseError
from utils.monitoring import monitoring

logger = logging.getLogger(__name__)

_FLOW_FIELDS = ("id", "source", "hops", "rho_bps", "sigma0_bits")
_OPTIONAL_FLOW_FIELDS = {"priority": 0, "max_frame_bits": 0.0}
_INTEGER_FIELDS = {"id", "source", "hops", "priority"}


def _number(value: Any, field: str, integer: bool = False):
    # bool is an int subclass but never a valid number here
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise NetworkParseError(f"{field}: expected a number, got {value!r}")
    if integer:
        if isinstance(value, float) and not value.is_integer():
            raise NetworkParseError(f"{field}: expected an integer, got {value!r}")
        return int(value)
    return float(value)


def network_from_dict(data: Dict[str, Any]) -> RingNetwork:
    """Build a ring network from its JSON description.

    Nodes are indexed 1..M in list order.

    Raises:
        NetworkParseError: missing fields or wrong types
        NetworkValidationError: the description violates a model constraint
    """
    if not isinstance(data, dict):
        raise NetworkParseError("top level must be an object with 'nodes' and 'flows'")
    for key in ("nodes", "flows"):
        if not isinstance(data.get(key), list):
            raise NetworkParseError(f"'{key}' must be a list")

    nodes = []
    for position, raw in enumerate(data["nodes"]):
        prefix = f"nodes[{position}]"
        if not isinstance(raw, dict):
            raise NetworkParseError(f"{prefix}: expected an object")
        for key in ("rate_bps", "latency_s"):
            if key not in raw:
                raise NetworkParseError(f"{prefix}.{key}: missing")
        nodes.append(Node(position + 1,
                          _number(raw["rate_bps"], f"{prefix}.rate_bps"),
                          _number(raw["latency_s"], f"{prefix}.latency_s")))

    flows = []
    for position, raw in enumerate(data["flows"]):
        prefix = f"flows[{position}]"
        if not isinstance(raw, dict):
            raise NetworkParseError(f"{prefix}: expected an object")
        values = {}
        for key in _FLOW_FIELDS:
            if key not in raw:
                raise NetworkParseError(f"{prefix}.{key}: missing")
            values[key] = _number(raw[key], f"{prefix}.{key}", key in _INTEGER_FIELDS)
        for key, default in _OPTIONAL_FLOW_FIELDS.items():
            values[key] = _number(raw.get(key, default), f"{prefix}.{key}", key in _INTEGER_FIELDS)
        flows.append(Flow(
            flow_id=values["id"],
            source=values["source"],
            hops=values["hops"],
            rho=values["rho_bps"],
            sigma0=values["sigma0_bits"],
            priority=values["priority"],
            max_frame=values["max_frame_bits"],
        ))

    return RingNetwork(nodes, flows)


def load_network(path: Union[str, Path]) -> RingNetwork:
    """Read and validate a ring network from a JSON file.

    Args:
        path: JSON network description

    Returns:
        The validated network

    Raises:
        NetworkParseError: unreadable file, malformed JSON or wrong field types
        NetworkValidationError: the description violates a model constraint
    """
    path = Path(path)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except OSError as e:
        raise NetworkParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise NetworkParseError(f"{path}: malformed JSON at line {e.lineno}: {e.msg}") from e

    net = network_from_dict(data)
    utilization = net.node_utilization()
    logger.info(f"Loaded {path.name}: M={net.size}, flows={len(net.flows)}, "
                f"max utilization={max(utilization):.4f}")
    monitoring.log_activity("network_loaded", {
        "path": str(path),
        "nodes": net.size,
        "flows": len(net.flows),
        "utilization": [round(u, 6) for u in utilization],
    })
    return net


def network_to_dict(net: RingNetwork) -> Dict[str, Any]:
    """JSON description of ``net``, the inverse of network_from_dict."""
    return {
        "nodes": [{"rate_bps": n.rate, "latency_s": n.latency} for n in net.nodes],
        "flows": [
            {
                "id": f.flow_id,
                "source": f.source,
                "hops": f.hops,
                "rho_bps": f.rho,
                "sigma0_bits": f.sigma0,
                "priority": f.priority,
                "max_frame_bits": f.max_frame,
            }
            for f in net.flows
        ],
    }


def dump_network(net: RingNetwork, path: Union[str, Path]):
    """Write ``net`` as JSON to ``path``."""
    with open(path, "w") as f:
        json.dump(network_to_dict(net), f, indent=2)
