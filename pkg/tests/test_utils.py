import logging

import pytest

from utils.error_handler import EXIT_ERROR, EXIT_INFEASIBLE, error_handler
from utils.errors import (
    Diverged,
    Infeasible,
    NetworkParseError,
    NetworkValidationError,
    ReportWriteError,
    RingAnalysisError,
    SingularMatrix,
    UnstableSubpath,
)
from utils.monitoring import Monitoring


class TestErrors:

    def test_infeasible_family(self):
        for error in (SingularMatrix, Diverged, UnstableSubpath):
            assert issubclass(error, Infeasible)
            assert issubclass(error, RingAnalysisError)
        assert not issubclass(NetworkParseError, Infeasible)

    def test_validation_error_field(self):
        assert NetworkValidationError("bad", field="hops").field == "hops"
        assert NetworkValidationError("bad").field is None


class TestErrorHandler:

    def test_exit_codes(self):
        assert error_handler.exit_code(SingularMatrix("x")) == EXIT_INFEASIBLE
        assert error_handler.exit_code(NetworkParseError("x")) == EXIT_ERROR
        assert error_handler.exit_code(RuntimeError("x")) == EXIT_ERROR

    def test_infeasible_response(self):
        response = error_handler.handle_error(Diverged("too big"), {"method": "RING_PMOO"})
        assert response["status"] == "infeasible"
        assert response["error_type"] == "Diverged"
        assert response["exit_code"] == EXIT_INFEASIBLE
        assert response["stack_trace"] == ""
        assert response["context"] == {"method": "RING_PMOO"}

    def test_error_response(self):
        response = error_handler.handle_error(ReportWriteError("disk full"))
        assert response["status"] == "error"
        assert "disk full" in response["user_message"]

    def test_user_message_names_the_field(self):
        message = error_handler.get_user_friendly_message(NetworkValidationError("flow 3: bad", field="hops"))
        assert "hops" in message
        assert "flow 3" in message

    def test_unknown_error_message(self):
        assert "--verbose" in error_handler.get_user_friendly_message(RuntimeError("boom"))

    def test_with_error_handling(self):
        @error_handler.with_error_handling(fallback_return=-1)
        def broken():
            raise ValueError("nope")

        assert broken() == -1

    def test_with_error_handling_returns_the_response(self):
        @error_handler.with_error_handling(errors=(RingAnalysisError,))
        def broken():
            raise NetworkParseError("bad file")

        response = broken()
        assert response["exit_code"] == 1
        assert response["context"]["function"] == "broken"
        assert "could not be read" in response["user_message"]

    def test_with_error_handling_lets_other_errors_through(self):
        @error_handler.with_error_handling(errors=(ValueError,))
        def broken():
            raise KeyError("missing")

        with pytest.raises(KeyError):
            broken()


class TestMonitoring:

    @pytest.fixture
    def monitor(self):
        return Monitoring()

    def test_log_activity(self, monitor, caplog):
        with caplog.at_level(logging.INFO):
            monitor.log_activity("scenario_point", {"M": 10})
        assert 'ACTIVITY: {"activity_type": "scenario_point", "details": {"M": 10}}' in caplog.text
        assert monitor.get_metrics()["scenario_point"]["count"] == 1

    def test_breakdowns(self, monitor):
        monitor.log_activity("analysis_completed", {"method": "RING_PMOO"})
        monitor.log_activity("analysis_completed", {"method": "RING_PMOO"})
        monitor.log_activity("error", {"error_type": "Diverged"})
        metrics = monitor.get_metrics()
        assert metrics["analysis_completed"]["details"] == {"RING_PMOO": 2}
        assert metrics["error"]["details"] == {"Diverged": 1}

    def test_time_function(self, monitor):
        @monitor.time_function("work")
        def work(x):
            return x * 2

        assert work(3) == 6
        assert monitor.get_metrics()["timing"]["count"] == 1

    def test_time_function_logs_on_error(self, monitor):
        @monitor.time_function()
        def fails():
            raise RuntimeError("x")

        with pytest.raises(RuntimeError):
            fails()
        assert monitor.get_metrics()["timing"]["count"] == 1

    def test_reset(self, monitor):
        monitor.log_activity("report_written", {})
        monitor.reset_metrics()
        assert monitor.get_metrics() == {}
