import json
import logging
import math
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd

from utils.errors import ReportWriteError
from utils.monitoring import monitoring

logger = logging.getLogger(__name__)

INF_LITERAL = "INF"
REPORT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class ReportRow:
    """One delay bound of one method at one sweep point.

    ``delay_bound_s`` is ``math.inf`` exactly when ``stable`` is False.
    ``det_margin`` is the determinant of the method's linear system, None for
    closed-form methods.
    """
    method: str
    scenario: str
    M: int
    load_pct: float
    burst_bytes: float
    traffic_class: str
    flow_id: int
    hops: int
    delay_bound_s: float
    stable: bool
    det_margin: Optional[float] = None

    def __post_init__(self):
        if math.isinf(self.delay_bound_s) == self.stable:
            raise ValueError(f"row {self.method}/{self.flow_id}: INF bound iff not stable")

    def to_record(self) -> Dict[str, Any]:
        record = asdict(self)
        if math.isinf(self.delay_bound_s):
            record["delay_bound_s"] = INF_LITERAL
        return record

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "ReportRow":
        def optional_float(value):
            return None if value is None or value == "" else float(value)

        stable = record["stable"]
        if isinstance(stable, str):
            stable = stable == "True"
        delay = record["delay_bound_s"]
        return cls(
            method=str(record["method"]),
            scenario=str(record["scenario"]),
            M=int(record["M"]),
            load_pct=float(record["load_pct"]),
            burst_bytes=float(record["burst_bytes"]),
            traffic_class=str(record["traffic_class"]),
            flow_id=int(record["flow_id"]),
            hops=int(record["hops"]),
            delay_bound_s=math.inf if delay == INF_LITERAL else float(delay),
            stable=bool(stable),
            det_margin=optional_float(record.get("det_margin")),
        )


COLUMNS = tuple(f.name for f in fields(ReportRow))


def rows_to_frame(rows: Sequence[ReportRow]) -> pd.DataFrame:
    """Report rows as a DataFrame with the report column order, INF as a literal."""
    return pd.DataFrame([row.to_record() for row in rows], columns=list(COLUMNS))


def emit_report(rows: Sequence[ReportRow], fmt: str, path: Union[str, Path]):
    """Write report rows as CSV or JSON.

    Args:
        rows: non-empty list of rows
        fmt: "csv" or "json"
        path: output file, parent directories are created

    Raises:
        ValueError: empty rows or unknown format
        ReportWriteError: the file could not be written
    """
    if not rows:
        raise ValueError("a report needs at least one row")
    if fmt not in REPORT_FORMATS:
        raise ValueError(f"unknown report format '{fmt}', expected one of {REPORT_FORMATS}")

    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if fmt == "csv":
            rows_to_frame(rows).to_csv(path, index=False, na_rep="")
        else:
            with open(path, "w") as f:
                json.dump([row.to_record() for row in rows], f, indent=2)
    except OSError as e:
        raise ReportWriteError(f"cannot write {path}: {e}") from e

    logger.info(f"Wrote {len(rows)} rows to {path}")
    monitoring.log_activity("report_written", {"path": str(path), "format": fmt, "rows": len(rows)})


def read_report(path: Union[str, Path]) -> List[ReportRow]:
    """Read a report written by emit_report; the format follows the file suffix."""
    path = Path(path)
    if path.suffix == ".json":
        with open(path, "r") as f:
            records = json.load(f)
    else:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
        records = frame.to_dict(orient="records")
    return [ReportRow.from_record(record) for record in records]
