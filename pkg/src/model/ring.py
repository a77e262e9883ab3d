"""Modular node arithmetic on a ring of M nodes numbered 1..M."""


def ring_add(node: int, k: int, size: int) -> int:
    """``node (+) k``: the node reached k hops downstream of ``node``."""
    return (node - 1 + k) % size + 1


def ring_sub(node: int, k: int, size: int) -> int:
    """``node (-) k``: the node k hops upstream of ``node``."""
    return (node - 1 - k) % size + 1


def ring_distance(start: int, end: int, size: int) -> int:
    """Number of hops from ``start`` to ``end`` following the ring direction, in [0, size)."""
    return (end - start) % size
