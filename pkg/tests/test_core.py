import json
from structlog.testing import capture_logs
from src.core.config import Settings
from src.core.exceptions import GraphFormatError, NumericalError, ParameterError, PathSpecError
from src.core.logger import LoggerMixin
from src.core.models import CheckId, CheckRecord, CheckStatus, VerificationReport


def test_settings_defaults(monkeypatch):
    monkeypatch.delenv("PATHSPEC_FLOW_ENGINE", raising=False)
    config = Settings(_env_file=None)
    assert config.default_seed == 1729
    assert config.eigen_tolerance == 1e-10
    assert config.eigen_max_sweeps == 100
    assert config.flow_engine == "scipy"
    assert config.exhaustive_max_n == 7


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("PATHSPEC_WORKERS", "4")
    monkeypatch.setenv("PATHSPEC_FLOW_ENGINE", "bfs")
    config = Settings(_env_file=None)
    assert config.workers == 4
    assert config.flow_engine == "bfs"


def test_exception_hierarchy():
    error = GraphFormatError("bad byte", 7)
    assert error.offset == 7
    assert "(offset 7)" in str(error)
    assert isinstance(error, ValueError) and isinstance(error, PathSpecError)
    assert issubclass(ParameterError, ValueError)
    assert issubclass(NumericalError, ArithmeticError)


def test_report_summary_and_exit_code():
    records = [
        CheckRecord(check=CheckId.RHO2_SIGN, subject="(n=7,k=3)", status=CheckStatus.DISCREPANCY),
        CheckRecord(check=CheckId.RHO2_SIGN, subject="(n=7,k=5)", status=CheckStatus.PASS),
    ]
    report = VerificationReport(corpus="unicyclic:7..7", checks=[CheckId.RHO2_SIGN], records=records)
    assert report.summary == {"L5": {"pass": 1, "fail": 0, "discrepancy": 1, "skipped": 0}}
    assert report.exit_code == 0

    failing = report.model_copy(update={"records": records + [
        CheckRecord(check=CheckId.RHO2_SIGN, subject="(n=8,k=3)", status=CheckStatus.FAIL, witness="(n=8,k=3)"),
    ]})
    assert failing.exit_code == 1
    assert json.loads(failing.to_json())["summary"]["L5"]["fail"] == 1


class _Worker(LoggerMixin):
    def work(self):
        with self.log_duration("done", size=3) as summary:
            summary["items"] = 2


def test_log_duration_reports_fields():
    with capture_logs() as logs:
        _Worker().work()
    [event] = [entry for entry in logs if entry["event"] == "done"]
    assert event["size"] == 3
    assert event["items"] == 2
    assert event["seconds"] >= 0
    assert event["component"] == "_Worker"
