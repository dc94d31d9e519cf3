"""Check outcomes and their text/JSON rendering."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Literal

Status = Literal["pass", "fail", "flagged"]
PASS: Status = "pass"
FAIL: Status = "fail"
FLAGGED: Status = "flagged"


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    paper_anchor: str
    status: Status
    max_abs_error: float
    convention_notes: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL, FLAGGED):
            raise ValueError(f"bad status {self.status!r}")


def judged(check_id: str, anchor: str, error: float, tol: float = 0.0,
           notes: str = "", ok: bool | None = None) -> CheckReport:
    """Build a pass/fail report from a deviation (``ok`` overrides the test)."""
    if ok is None:
        ok = error <= tol
    return CheckReport(check_id, anchor, PASS if ok else FAIL, float(error), notes)


def _fmt_error(x: float) -> str:
    if math.isnan(x):
        return "nan"
    return f"{x:.3e}"


def render_report(reports: Iterable[CheckReport], fmt: str = "text") -> bytes:
    reports = list(reports)
    if fmt == "json":
        keys = [f.name for f in fields(CheckReport)]
        payload = [{k: asdict(r)[k] for k in keys} for r in reports]
        return json.dumps(payload, indent=2, ensure_ascii=False).encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    if not reports:
        return b""
    width = max(len(r.check_id) for r in reports)
    lines = [
        f"{r.check_id:<{width}}  {r.status:<7}  {_fmt_error(r.max_abs_error)}  {r.paper_anchor}"
        for r in reports
    ]
    return ("\n".join(lines) + "\n").encode("utf-8")
