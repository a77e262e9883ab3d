import math

import pytest

from analysis import AnalysisResult, Analyzer
from baselines import MethodTag
from model import Flow
from networks import ring
from pmoo import SubpathKey
from utils.monitoring import monitoring


@pytest.fixture
def analyzer():
    return Analyzer()


@pytest.fixture(autouse=True)
def fresh_metrics():
    monitoring.reset_metrics()
    yield
    monitoring.reset_metrics()


class TestAnalyzer:

    def test_runs_all_methods_in_order(self, analyzer, two_node):
        results = analyzer.analyze(two_node)
        assert [r.method for r in results] == list(MethodTag)
        assert all(r.feasible for r in results)

    def test_bounds(self, analyzer, two_node):
        results = {r.method: r for r in analyzer.analyze(two_node)}
        key = SubpathKey(1, 2)
        assert results[MethodTag.RING_PMOO].bound(key) == pytest.approx(0.0583333333333, rel=1e-9)
        assert results[MethodTag.TIME_STOPPING].bound(key) == pytest.approx(2 / 27, rel=1e-9)
        assert results[MethodTag.BACKLOG_BASED].bound(key) == pytest.approx(12.4 / 90, rel=1e-9)
        assert results[MethodTag.WCD_LOWER].bound(key) == pytest.approx(0.0444444444444, rel=1e-9)

    def test_determinants(self, analyzer, two_node):
        results = {r.method: r for r in analyzer.analyze(two_node)}
        assert results[MethodTag.RING_PMOO].determinant == pytest.approx(80 / 81, rel=1e-9)
        assert results[MethodTag.TIME_STOPPING].determinant == pytest.approx(0.99, rel=1e-9)
        assert results[MethodTag.BACKLOG_BASED].determinant is None

    def test_selected_methods(self, analyzer, two_node):
        results = analyzer.analyze(two_node, [MethodTag.WCD_LOWER])
        assert len(results) == 1
        assert results[0].method is MethodTag.WCD_LOWER

    def test_infeasible_is_a_result(self, analyzer, unstable_broadcast):
        result = analyzer.analyze_method(unstable_broadcast, MethodTag.RING_PMOO)
        assert not result.feasible
        assert result.bounds == {}
        assert result.reason
        assert result.determinant < 0
        assert result.bound(SubpathKey(1, 4)) == math.inf

    def test_unbounded_node(self, analyzer):
        net = ring(2, [Flow(1, 1, 1, 100.0, 1.0), Flow(2, 1, 1, 0.0, 1.0)])
        result = analyzer.analyze_method(net, MethodTag.BACKLOG_BASED)
        assert not result.feasible
        assert result.reason == "unbounded node"

    def test_activities_are_counted(self, analyzer, two_node, unstable_broadcast):
        analyzer.analyze(two_node)
        analyzer.analyze_method(unstable_broadcast, MethodTag.RING_PMOO)
        metrics = monitoring.get_metrics()
        assert metrics["analysis_started"]["count"] == 5
        assert metrics["analysis_completed"]["count"] == 4
        assert metrics["analysis_infeasible"]["details"] == {"RING_PMOO": 1}
        assert metrics["timing"]["count"] == 1

    def test_result_defaults(self):
        result = AnalysisResult(MethodTag.RING_PMOO, True)
        assert result.bounds == {}
        assert result.determinant is None
