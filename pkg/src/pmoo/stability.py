from dataclasses import dataclass

from utils.errors import DegenerateRing, UnstableNode


@dataclass(frozen=True)
class StabilityVerdict:
    """Closed-form stability of a broadcast ring with one flow per node.

    Args:
        stable: True iff rho < R / (2 (M - 1)); the boundary itself is unstable
        x: rho / (R - (M - 1) rho)
        determinant: (1 - M)(x + 1)^(M - 1)(x - 1 / (M - 1)), the determinant of Id - A1 A2
        threshold_rho: R / (2 (M - 1))
        margin: threshold_rho - rho, positive when stable
    """
    stable: bool
    x: float
    determinant: float
    threshold_rho: float
    margin: float


def broadcast_stability(nodes: int, rate: float, rho: float) -> StabilityVerdict:
    """Stability of an M-node broadcast ring where every node sends one full-loop flow of rate ``rho``.

    Args:
        nodes: ring size M
        rate: node service rate R
        rho: per-flow rate

    Returns:
        Verdict with the closed-form determinant and the margin to the threshold

    Raises:
        DegenerateRing: if M < 2
        UnstableNode: if (M - 1) rho >= R
    """
    if nodes < 2:
        raise DegenerateRing(f"broadcast stability needs at least 2 nodes, got {nodes}")
    if (nodes - 1) * rho >= rate:
        raise UnstableNode(f"cross traffic {(nodes - 1) * rho} exhausts the node rate {rate}")
    x = rho / (rate - (nodes - 1) * rho)
    det = (1 - nodes) * (x + 1) ** (nodes - 1) * (x - 1 / (nodes - 1))
    threshold = rate / (2 * (nodes - 1))
    return StabilityVerdict(rho < threshold, x, det, threshold, threshold - rho)
