from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any


def _jsonable(v: Any) -> Any:
    # big integers travel as decimal strings; small bookkeeping ints stay ints
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class VerificationReport:
    """Pass/fail evidence for one theorem check.

    Each case is a dict holding the sub-case parameters plus ``expected``
    and ``actual``; the report passes iff every case has them equal.
    """

    theorem: str
    params: dict = field(default_factory=dict)
    cases: list[dict] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    def add(self, expected, actual, **subcase) -> bool:
        ok = expected == actual
        self.cases.append({**subcase, "expected": expected, "actual": actual, "ok": ok})
        return ok

    @property
    def passed(self) -> bool:
        return not self.errors and all(c["ok"] for c in self.cases)

    def failures(self) -> list[dict]:
        return [c for c in self.cases if not c["ok"]]

    def to_json(self) -> dict:
        cases = []
        for c in self.cases:
            row = {}
            for k, v in c.items():
                if k in ("expected", "actual"):
                    row[k] = _jsonable(v)
                elif k != "ok":
                    row[k] = v
            cases.append(row)
        out = {"theorem": self.theorem, "params": self.params, "passed": self.passed, "cases": cases}
        if self.errors:
            out["errors"] = self.errors
        return out

    def csv_rows(self) -> list[list]:
        params = json.dumps(self.params, sort_keys=True)
        out = []
        for c in self.cases:
            sub = {k: v for k, v in c.items() if k not in ("expected", "actual", "ok")}
            out.append([
                self.theorem,
                params,
                json.dumps(sub, sort_keys=True),
                json.dumps(_jsonable(c["expected"])),
                json.dumps(_jsonable(c["actual"])),
                "pass" if c["ok"] else "FAIL",
            ])
        for e in self.errors:
            out.append([self.theorem, params, json.dumps({"error": e}), "", "", "FAIL"])
        return out

    def dumps(self, fmt: str = "json") -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), sort_keys=True)
        if fmt == "csv":
            return dump_reports([self], "csv")
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.theorem} {json.dumps(self.params, sort_keys=True)}"]
        for c in self.cases:
            sub = {k: v for k, v in c.items() if k not in ("expected", "actual", "ok")}
            mark = "ok  " if c["ok"] else "FAIL"
            lines.append(f"  {mark} {sub} expected={c['expected']} actual={c['actual']}")
        lines.extend(f"  error: {e}" for e in self.errors)
        return "\n".join(lines)


CSV_HEADER = ["theorem", "params", "case", "expected", "actual", "ok"]


def dump_reports(reports, fmt: str = "json") -> str:
    """Serialise a stream of reports: JSON lines, one CSV table, or text blocks."""
    reports = list(reports)
    if fmt == "json":
        return "\n".join(r.dumps("json") for r in reports)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in reports:
            w.writerows(r.csv_rows())
        return buf.getvalue().rstrip("\n")
    if fmt == "text":
        blocks = [r.dumps("text") for r in reports]
        ok = sum(r.passed for r in reports)
        blocks.append(f"{ok}/{len(reports)} reports passed")
        return "\n".join(blocks)
    raise ValueError(f"unknown format {fmt!r}")
