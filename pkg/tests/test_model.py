import random

import numpy as np
import pytest

from model import Flow, InterfererCategory, Node, RingNetwork, ring_add, ring_distance, ring_sub
from networks import random_ring, ring
from utils.errors import InvalidHopCount, NetworkValidationError, NotAnInterferer


class TestRingArithmetic:

    def test_ring_add_wraps(self):
        assert ring_add(5, 1, 5) == 1
        assert ring_add(3, 4, 5) == 2
        assert ring_add(1, 0, 5) == 1

    def test_ring_sub_wraps(self):
        assert ring_sub(1, 1, 5) == 5
        assert ring_sub(ring_add(4, 3, 5), 3, 5) == 4

    def test_ring_distance(self):
        assert ring_distance(2, 2, 5) == 0
        assert ring_distance(4, 1, 5) == 2
        assert ring_distance(1, 4, 5) == 3


class TestNetworkValidation:

    def test_node_rejects_non_positive_rate(self):
        with pytest.raises(NetworkValidationError) as info:
            Node(2, 0.0, 0.01)
        assert info.value.field == "nodes[1].rate_bps"

    def test_flow_rejects_negative_burst(self):
        with pytest.raises(NetworkValidationError) as info:
            Flow(1, 1, 1, 1.0, -1.0)
        assert info.value.field == "sigma0_bits"

    def test_hops_beyond_ring_size_names_the_flow(self):
        with pytest.raises(NetworkValidationError) as info:
            ring(3, [Flow(7, 1, 4, 1.0, 1.0)])
        assert "flow 7" in str(info.value)
        assert info.value.field == "hops"

    def test_duplicate_flow_id(self):
        with pytest.raises(NetworkValidationError):
            ring(3, [Flow(1, 1, 1, 1.0, 1.0), Flow(1, 2, 1, 1.0, 1.0)])

    def test_source_outside_ring(self):
        with pytest.raises(NetworkValidationError):
            ring(3, [Flow(1, 4, 1, 1.0, 1.0)])

    def test_overload_lists_every_node(self):
        with pytest.raises(NetworkValidationError) as info:
            ring(3, [Flow(1, 1, 2, 60.0, 1.0), Flow(2, 1, 2, 60.0, 1.0)])
        assert "node 1" in str(info.value)
        assert "node 2" in str(info.value)
        assert "node 3" not in str(info.value)

    def test_full_utilization_is_allowed(self):
        net = ring(2, [Flow(1, 1, 2, 50.0, 1.0), Flow(2, 2, 2, 50.0, 1.0)])
        assert net.node_utilization() == pytest.approx([1.0, 1.0])

    def test_nodes_out_of_order(self):
        with pytest.raises(NetworkValidationError):
            RingNetwork([Node(2, 1.0, 0.0), Node(1, 1.0, 0.0)], [])


class TestNetworkQueries:

    @pytest.fixture
    def net(self):
        # flow 1 crosses nodes 1, 2
        return ring(4, [
            Flow(1, 1, 2, 1.0, 1.0),
            Flow(2, 2, 1, 1.0, 1.0),
            Flow(3, 4, 2, 1.0, 1.0),
            Flow(4, 2, 4, 1.0, 1.0),
            Flow(5, 3, 1, 1.0, 1.0),
        ])

    def test_flows_are_sorted_by_id(self):
        net = ring(2, [Flow(3, 1, 1, 1.0, 1.0), Flow(1, 1, 1, 1.0, 1.0)])
        assert [f.flow_id for f in net.flows] == [1, 3]

    def test_paths(self, net):
        assert net.path(net.flow(4)) == (2, 3, 4, 1)
        assert net.subpath(net.flow(4), 2) == (2, 3)

    def test_subpath_hop_count_checked(self, net):
        with pytest.raises(InvalidHopCount):
            net.subpath(net.flow(1), 3)
        with pytest.raises(InvalidHopCount):
            net.subpath(net.flow(1), 0)

    def test_interference_set(self, net):
        others = net.interference_set(net.flow(1), 2)
        assert [f.flow_id for f in others] == [2, 3, 4]
        assert [f.flow_id for f in net.interference_set(net.flow(1), 1)] == [3, 4]

    def test_classify_interferers(self, net):
        f = net.flow(1)
        assert net.classify_interferer(net.flow(2), f, 2) is InterfererCategory.SOURCE_ON_SUBPATH
        assert net.classify_interferer(net.flow(3), f, 2) is InterfererCategory.CROSSES_F_SOURCE
        assert net.classify_interferer(net.flow(4), f, 2) is InterfererCategory.BOTH

    def test_non_interferer(self, net):
        with pytest.raises(NotAnInterferer):
            net.classify_interferer(net.flow(5), net.flow(1), 2)
        with pytest.raises(NotAnInterferer):
            net.classify_interferer(net.flow(1), net.flow(1), 2)

    def test_entry_burst_hops(self, net):
        f = net.flow(1)
        assert net.entry_burst_hops(net.flow(3), f) == 1
        assert net.entry_burst_hops(net.flow(4), f) == 3

    def test_priority_split(self):
        net = ring(2, [
            Flow(1, 1, 1, 1.0, 1.0, priority=1),
            Flow(2, 1, 1, 1.0, 1.0, priority=0),
            Flow(3, 1, 1, 1.0, 1.0, priority=1),
            Flow(4, 1, 1, 1.0, 1.0, priority=2),
        ])
        hp, lp = net.hp_lp_sets(net.flow(1), 1)
        assert [f.flow_id for f in hp] == [2, 3]
        assert [f.flow_id for f in lp] == [4]
        assert net.priority_levels == (0, 1, 2)

    def test_crossing_matrix(self, net):
        matrix = net.crossing_matrix()
        assert matrix.shape == (5, 4)
        assert np.array_equal(matrix[3], [True, True, True, True])
        assert np.array_equal(matrix[2], [True, False, False, True])

    def test_node_load(self, net):
        assert net.node_load(2) == pytest.approx(3.0)
        assert net.crossing_flows(3) == (net.flow(4), net.flow(5))


class TestRandomRingQueries:
    """Queries checked against direct enumeration on random rings."""

    @pytest.fixture
    def nets(self):
        rng = random.Random(41)
        return [random_ring(rng, priorities=True) for _ in range(40)]

    def test_interference_set_is_union_of_crossing_flows(self, nets):
        for net in nets:
            for flow in net.flows:
                for n in range(1, flow.hops + 1):
                    expected = {
                        other.flow_id
                        for node in net.subpath(flow, n)
                        for other in net.crossing_flows(node)
                        if other.flow_id != flow.flow_id
                    }
                    ids = [f.flow_id for f in net.interference_set(flow, n)]
                    assert ids == sorted(expected)

    def test_interferer_categories_partition_the_set(self, nets):
        for net in nets:
            for flow in net.flows:
                for n in range(1, flow.hops + 1):
                    nodes = net.subpath(flow, n)
                    interferers = net.interference_set(flow, n)
                    for other in interferers:
                        source_on = other.source in nodes
                        crosses = other.source != flow.source and flow.source in net.path(other)
                        assert source_on or crosses
                        expected = {
                            (True, True): InterfererCategory.BOTH,
                            (True, False): InterfererCategory.SOURCE_ON_SUBPATH,
                            (False, True): InterfererCategory.CROSSES_F_SOURCE,
                        }[(source_on, crosses)]
                        assert net.classify_interferer(other, flow, n) is expected
                    for other in net.flows:
                        if other not in interferers:
                            with pytest.raises(NotAnInterferer):
                                net.classify_interferer(other, flow, n)

    def test_subpaths_are_prefixes(self, nets):
        for net in nets:
            for flow in net.flows:
                assert net.subpath(flow, flow.hops) == net.path(flow)
                for n in range(1, flow.hops):
                    assert net.subpath(flow, n) == net.subpath(flow, n + 1)[:n]

    def test_priority_split_is_a_partition(self, nets):
        for net in nets:
            for flow in net.flows:
                for node in net.path(flow):
                    hp, lp = net.hp_lp_sets(flow, node)
                    assert not set(hp) & set(lp)
                    others = {f for f in net.crossing_flows(node) if f.flow_id != flow.flow_id}
                    assert set(hp) | set(lp) == others
