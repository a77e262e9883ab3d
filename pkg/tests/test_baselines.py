import math
import random

import pytest

from baselines import (
    MethodTag,
    backlog_based_analysis,
    build_burst_system,
    node_backlog_bounds,
    time_stopping_analysis,
    wcd_lower_bound,
)
from model import Flow
from networks import broadcast_ring, random_feedforward_ring, random_ring, ring, two_node_ring
from pmoo import Policy, SubpathKey, ring_pmoo_analysis
from utils.errors import Infeasible

REL = 1e-9


class TestMethodTag:

    def test_parse(self):
        assert MethodTag.parse("ring_pmoo") is MethodTag.RING_PMOO
        assert MethodTag.parse(" time-stopping ") is MethodTag.TIME_STOPPING

    def test_parse_unknown(self):
        with pytest.raises(ValueError) as info:
            MethodTag.parse("simulation")
        assert "WCD_LOWER" in str(info.value)


class TestTimeStopping:

    def test_two_node_ring(self, two_node):
        bounds = time_stopping_analysis(two_node)
        assert bounds[SubpathKey(1, 1)].bound == pytest.approx(1 / 27, rel=REL)
        assert bounds[SubpathKey(1, 2)].bound == pytest.approx(2 / 27, rel=REL)

    def test_burst_system(self, two_node):
        system = build_burst_system(two_node)
        assert system.determinant() == pytest.approx(0.99, rel=REL)
        assert list(system.constant) == pytest.approx([2.1, 2.1], rel=REL)

    def test_feedforward(self, feedforward):
        bounds = time_stopping_analysis(feedforward)
        assert bounds[SubpathKey(1, 3)].bound == pytest.approx(0.1353056, rel=1e-6)
        assert bounds[SubpathKey(2, 2)].bound == pytest.approx(0.1116013, rel=1e-6)
        assert bounds[SubpathKey(3, 1)].bound == pytest.approx(5 / 85, rel=REL)

    def test_priority_levels_are_unknowns(self):
        net = ring(3, [
            Flow(1, 1, 3, 5.0, 1.0, priority=0, max_frame=1.0),
            Flow(2, 2, 3, 5.0, 1.0, priority=1, max_frame=1.0),
        ])
        assert build_burst_system(net, Policy.FP).matrix.shape == (6, 6)
        assert build_burst_system(net, Policy.ARBITRARY).matrix.shape == (3, 3)

    def test_ring_without_flows(self):
        net = ring(3, [])
        assert build_burst_system(net, Policy.FP).matrix.shape == (3, 3)
        assert time_stopping_analysis(net, Policy.FP) == {}
        assert time_stopping_analysis(net) == {}

    def test_unstable_broadcast(self):
        with pytest.raises(Infeasible):
            time_stopping_analysis(broadcast_ring(6, rho_factor=1.5))

    def test_never_below_pmoo_on_feedforward_tandems(self):
        rng = random.Random(17)
        for _ in range(50):
            net = random_feedforward_ring(rng)
            pmoo = ring_pmoo_analysis(net)
            additive = time_stopping_analysis(net)
            for flow in net.flows:
                key = SubpathKey(flow.flow_id, flow.hops)
                assert pmoo[key].bound <= additive[key].bound * (1 + 1e-12)

    @pytest.mark.parametrize("size", [5, 6, 7, 8])
    def test_never_below_pmoo_on_broadcast_rings(self, size):
        net = broadcast_ring(size, rho_factor=0.2)
        pmoo = ring_pmoo_analysis(net)
        for key, bound in time_stopping_analysis(net).items():
            assert pmoo[key].bound <= bound.bound

    def test_can_undercut_pmoo_behind_a_heavy_same_source_flow(self):
        # flow 1 grows its burst by the aggregate delay of node 1, below its
        # left-over latency behind flow 3
        net = ring(2, [
            Flow(1, 1, 2, 10.0, 1.0),
            Flow(2, 2, 1, 10.0, 1.0),
            Flow(3, 1, 1, 50.0, 10.0),
        ])
        key = SubpathKey(2, 1)
        additive = time_stopping_analysis(net)[key].bound
        pmoo = ring_pmoo_analysis(net)[key].bound
        assert additive == pytest.approx(0.01 + 3.3 / 90, rel=REL)
        assert pmoo == pytest.approx(0.01 + 4.3 / 90, rel=REL)
        assert additive < pmoo


class TestBacklogBased:

    def test_two_node_ring(self, two_node):
        assert node_backlog_bounds(two_node) == pytest.approx([6.2 / 0.9, 6.2 / 0.9], rel=REL)
        bounds = backlog_based_analysis(two_node)
        assert bounds[SubpathKey(1, 2)].bound == pytest.approx(12.4 / 90, rel=REL)

    def test_feedforward(self, feedforward):
        assert node_backlog_bounds(feedforward) == pytest.approx([12 / 0.85, 14 / 0.85, 11 / 0.85, 8 / 0.85],
                                                                 rel=REL)
        bounds = backlog_based_analysis(feedforward)
        assert bounds[SubpathKey(1, 3)].bound == pytest.approx(37 / 85, rel=REL)
        assert bounds[SubpathKey(2, 2)].bound == pytest.approx(26 / 85, rel=REL)
        assert bounds[SubpathKey(3, 1)].bound == pytest.approx(12 / 85, rel=REL)

    def test_finite_at_full_load(self):
        net = broadcast_ring(4, rho=25.0)
        assert all(math.isfinite(b.bound) for b in backlog_based_analysis(net).values())

    def test_idle_flow_at_full_load_is_unbounded(self):
        net = ring(2, [Flow(1, 1, 1, 100.0, 1.0), Flow(2, 1, 1, 0.0, 1.0)])
        assert node_backlog_bounds(net)[0] == math.inf

    def test_never_below_pmoo_on_random_rings(self):
        rng = random.Random(1)
        for _ in range(300):
            net = random_ring(rng)
            pmoo = ring_pmoo_analysis(net)
            for key, bound in backlog_based_analysis(net).items():
                assert pmoo[key].bound <= bound.bound * (1 + 1e-12)

    def test_never_below_pmoo_on_feedforward_tandems(self):
        rng = random.Random(29)
        for _ in range(50):
            net = random_feedforward_ring(rng)
            pmoo = ring_pmoo_analysis(net)
            for key, bound in backlog_based_analysis(net).items():
                assert pmoo[key].bound <= bound.bound

    def test_undercut_by_pmoo_near_its_stability_frontier(self):
        # Ring-PMOO diverges at rho = 50 on this ring while the backlog bound stays finite
        net = two_node_ring(rho=45.0)
        key = SubpathKey(1, 1)
        backlog = backlog_based_analysis(net)[key].bound
        pmoo = ring_pmoo_analysis(net)[key].bound
        assert backlog == pytest.approx(10.4 / 55, rel=REL)
        assert pmoo == pytest.approx(0.2 + 1 / 55, rel=REL)
        assert backlog < pmoo


class TestWcdLower:

    def test_two_node_ring(self, two_node):
        bounds = wcd_lower_bound(two_node)
        assert bounds[SubpathKey(1, 2)].bound == pytest.approx(0.0444444444444, rel=REL)

    def test_equals_pmoo_without_cycles(self, feedforward):
        pmoo = ring_pmoo_analysis(feedforward)
        wcd = wcd_lower_bound(feedforward)
        assert {k: b.bound for k, b in wcd.items()} == pytest.approx({k: b.bound for k, b in pmoo.items()}, rel=REL)

    def test_never_above_pmoo(self):
        rng = random.Random(23)
        for _ in range(50):
            net = random_ring(rng)
            pmoo = ring_pmoo_analysis(net)
            for key, bound in wcd_lower_bound(net).items():
                assert bound.bound <= pmoo[key].bound
