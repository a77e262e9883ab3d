"""Latency/burst coupling of all subpaths of a ring as one linear system.

For every flow f and hop count n, the subpath latency is

    T(f, n) = C1(f, n) + (1 / R(f, n)) * sum of sigma(i, m_i(f)) over the cyclic interferers of f

and the burst of f after n hops is sigma(f, n) = sigma_f^0 + rho_f * T(f, n). In
matrix form T = C1 + A1 sigma and sigma = C2 + A2 T, so T solves
(Id - A1 A2) T = C3 with C3 = C1 + A1 C2.

The set of cyclic interferers of f does not depend on n, so every row of f
references the same burst sum. Solving for these sums gives a system with one
unknown per coupled flow, with the same determinant as Id - A1 A2.
"""

import logging
from typing import Dict, NamedTuple, Tuple

import numpy as np

from config import REL_TOL
from linalg import DenseMatrix, determinant, solve
from model import RingNetwork
from pmoo.subpath import BurstVector, Policy, SubpathKey
from utils.errors import NegativeSolution, UnstableSubpath

logger = logging.getLogger(__name__)


class MatrixSystem:
    """Rows of the latency and burst equations, one per (flow, hop count).

    Rows are ordered by flow id then hop count. ``groups[g]`` holds the row
    indices of the bursts summed in group g, and ``row_group[r]`` is the group
    referenced by row r, or -1 when the row has no cyclic interferer.
    """

    def __init__(self, keys: Tuple[SubpathKey, ...], c1: np.ndarray, rates: np.ndarray, a2_diag: np.ndarray,
                 c2: np.ndarray, row_group: np.ndarray, groups: Tuple[np.ndarray, ...], policy: Policy):
        self.keys = keys
        self.index: Dict[SubpathKey, int] = {key: row for row, key in enumerate(keys)}
        self.c1 = c1
        self.rates = rates
        self.a2_diag = a2_diag
        self.c2 = c2
        self.row_group = row_group
        self.groups = groups
        self.policy = policy

    @property
    def size(self) -> int:
        return len(self.keys)

    @property
    def feedforward(self) -> bool:
        """True when no row depends on a burst, so T = C1."""
        return not self.groups

    def variable_columns(self, row: int) -> np.ndarray:
        """Burst rows referenced by latency row ``row``, each with coefficient 1 / rates[row]."""
        group = self.row_group[row]
        return self.groups[group] if group >= 0 else np.empty(0, dtype=int)

    @property
    def a1(self) -> DenseMatrix:
        a1 = np.zeros((self.size, self.size))
        for row in range(self.size):
            a1[row, self.variable_columns(row)] = 1.0 / self.rates[row]
        return DenseMatrix(a1)

    @property
    def a2(self) -> DenseMatrix:
        return DenseMatrix(np.diag(self.a2_diag))

    @property
    def c3(self) -> np.ndarray:
        """``C1 + A1 C2``."""
        sums = np.array([self.c2[cols].sum() for cols in self.groups])
        extra = np.zeros(self.size)
        coupled = self.row_group >= 0
        extra[coupled] = sums[self.row_group[coupled]] / self.rates[coupled]
        return self.c1 + extra

    def system_matrix(self) -> DenseMatrix:
        """Dense ``Id - A1 A2``; only sensible for small rings."""
        return DenseMatrix(np.eye(self.size) - self.a1.entries * self.a2_diag[np.newaxis, :])

    def __repr__(self):
        return f"<MatrixSystem: {self.size} rows, {len(self.groups)} coupled flows>"


class SystemSolution(NamedTuple):
    """Solved subpath latencies and bursts."""
    latencies: Dict[SubpathKey, float]
    bursts: BurstVector


def build_matrix_system(net: RingNetwork, policy: Policy = Policy.ARBITRARY) -> MatrixSystem:
    """Assemble the latency and burst rows of every (flow, hop count) of ``net``.

    Under fixed priority only flows of higher or equal priority interfere, and
    each node latency grows by the largest lower-priority frame time.

    Raises:
        UnstableSubpath: if some subpath has no residual rate
    """
    flows = net.flows
    size = net.size
    crossing = net.crossing_matrix()
    rho = np.array([f.rho for f in flows])
    sigma0 = np.array([f.sigma0 for f in flows])
    priority = np.array([f.priority for f in flows])
    frames = np.array([f.max_frame for f in flows])
    sources = np.array([f.source - 1 for f in flows])
    node_rate = np.array([node.rate for node in net.nodes])
    node_lat = np.array([node.latency for node in net.nodes])
    offsets = np.concatenate([[0], np.cumsum([f.hops for f in flows])])

    keys = []
    c1 = np.empty(offsets[-1])
    rates = np.empty(offsets[-1])
    row_group = np.full(offsets[-1], -1, dtype=int)
    groups = []

    for fi, flow in enumerate(flows):
        if policy is Policy.FP:
            competing = priority <= flow.priority
            lower = priority > flow.priority
        else:
            competing = np.ones(len(flows), dtype=bool)
            lower = np.zeros(len(flows), dtype=bool)
        competing[fi] = False

        source = flow.source - 1
        cyclic = np.flatnonzero(competing & crossing[:, source] & (sources != source))
        group = -1
        if cyclic.size:
            entry_hops = (source - 1 - sources[cyclic]) % size + 1
            groups.append(offsets[cyclic] + entry_hops - 1)
            group = len(groups) - 1

        total_latency = 0.0
        shared_rho_latency = 0.0
        source_bursts = 0.0
        rate = np.inf
        for h, node in enumerate(net.path(flow)):
            k = node - 1
            here = competing & crossing[:, k]
            lower_here = lower & crossing[:, k]
            frame = frames[lower_here].max() if lower_here.any() else 0.0
            latency = node_lat[k] + frame / node_rate[k]
            total_latency += latency
            shared_rho_latency += latency * rho[here].sum()
            source_bursts += sigma0[here & (sources == k)].sum()
            rate = min(rate, node_rate[k] - rho[here].sum())
            if rate <= 0:
                raise UnstableSubpath(f"flow {flow.flow_id}: no residual rate on its first {h + 1} hops")

            row = offsets[fi] + h
            keys.append(SubpathKey(flow.flow_id, h + 1))
            c1[row] = total_latency + (shared_rho_latency + source_bursts) / rate
            rates[row] = rate
            row_group[row] = group

    a2_diag = np.repeat(rho, [f.hops for f in flows])
    c2 = np.repeat(sigma0, [f.hops for f in flows])
    system = MatrixSystem(tuple(keys), c1, rates, a2_diag, c2, row_group, tuple(groups), policy)
    logger.debug(f"Built {system!r} for {net!r} under {policy.value} multiplexing")
    return system


def reduced_system(system: MatrixSystem) -> Tuple[DenseMatrix, np.ndarray]:
    """Coupling between the burst sums of the cyclic interferers.

    With V_g the sum of the bursts of group g, V = b + W V where
    ``W[g, g'] = sum over rows r of g referencing g' of rho_r / R_r`` and
    ``b[g] = sum over rows r of g of sigma_r^0 + rho_r * C1_r``.

    Raises:
        ValueError: if the system has no cyclic interferer
    """
    if system.feedforward:
        raise ValueError("a feedforward system has no coupled bursts")
    count = len(system.groups)
    coupling = np.zeros((count, count))
    constant = np.empty(count)
    for g, rows in enumerate(system.groups):
        constant[g] = np.sum(system.c2[rows] + system.a2_diag[rows] * system.c1[rows])
        targets = system.row_group[rows]
        coupled = targets >= 0
        np.add.at(coupling[g], targets[coupled], (system.a2_diag[rows] / system.rates[rows])[coupled])
    return DenseMatrix(coupling), constant


def system_determinant(system: MatrixSystem) -> float:
    """Determinant of ``Id - A1 A2``, computed on the reduced system."""
    if system.feedforward:
        return 1.0
    coupling, _ = reduced_system(system)
    return determinant(DenseMatrix.identity(coupling.rows) - coupling)


def solve_system(system: MatrixSystem) -> SystemSolution:
    """Solve the latency/burst system.

    Returns:
        Latency of every subpath and burst of every flow after each hop

    Raises:
        SingularMatrix: if ``Id - A1 A2`` is not invertible
        NegativeSolution: if the solution has negative latencies or bursts
    """
    coupled = system.row_group >= 0
    latencies = system.c1.copy()
    if not system.feedforward:
        coupling, constant = reduced_system(system)
        sums = solve(DenseMatrix.identity(coupling.rows) - coupling, constant)
        latencies[coupled] += sums[system.row_group[coupled]] / system.rates[coupled]
    bursts = system.c2 + system.a2_diag * latencies

    scale = max(float(np.max(np.abs(latencies), initial=0.0)), float(np.max(np.abs(bursts), initial=0.0)))
    if np.any(latencies < -REL_TOL * scale) or np.any(bursts < -REL_TOL * scale):
        raise NegativeSolution("latency/burst system solved to negative values")

    entries = {SubpathKey(key.flow_id, 0): float(sigma) for key, sigma in zip(system.keys, system.c2) if key.n == 1}
    entries.update(zip(system.keys, bursts.tolist()))
    return SystemSolution(dict(zip(system.keys, latencies.tolist())), BurstVector(entries))
