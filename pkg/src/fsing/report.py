"""Check records and deterministic reports.

A report is a list of executed checks plus a summary.  JSON output is
byte-identical across runs on the same input: fixed key order, no
timestamps; per-check timings appear only when explicitly requested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def jsonable(value: Any) -> Any:
    """Recursively convert to JSON-friendly exact values."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


def matches(expected: Any, got: Any) -> bool:
    """Expected-verdict comparison; a dict matches by its own keys only."""
    if isinstance(expected, dict):
        if not isinstance(got, dict):
            return False
        return all(k in got and matches(v, got[k]) for k, v in expected.items())
    if isinstance(expected, (list, tuple)):
        if not isinstance(got, (list, tuple)) or len(expected) != len(got):
            return False
        return all(matches(e, g) for e, g in zip(expected, got))
    return expected == got


@dataclass
class CheckRecord:
    name: str
    kind: str
    inputs: dict = field(default_factory=dict)
    verdict: Any = None
    expected: Any = None
    witness: Any = None
    detail: Any = None
    error: str | None = None
    seconds: float = 0.0
    skipped: bool = False

    @property
    def ok(self) -> bool:
        if self.skipped:
            return True
        if self.error is not None:
            return False
        if self.expected is None:
            return True
        return matches(jsonable(self.expected), jsonable(self.verdict))

    def to_dict(self, timings: bool = False) -> dict:
        out: dict[str, Any] = {
            "name": self.name,
            "kind": self.kind,
            "inputs": jsonable(self.inputs),
            "verdict": jsonable(self.verdict),
        }
        if self.expected is not None:
            out["expected"] = jsonable(self.expected)
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.detail is not None:
            out["detail"] = jsonable(self.detail)
        if self.error is not None:
            out["error"] = self.error
        if self.skipped:
            out["skipped"] = True
        out["ok"] = self.ok
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class Report:
    checks: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> CheckRecord:
        self.checks.append(record)
        return record

    def summary(self) -> dict:
        return {
            "total": len(self.checks),
            "passed": sum(1 for c in self.checks if c.ok and not c.skipped),
            "mismatched": sum(1 for c in self.checks if not c.ok and c.error is None),
            "errors": sum(1 for c in self.checks if c.error is not None),
            "skipped": sum(1 for c in self.checks if c.skipped),
        }

    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def exit_code(self) -> int:
        return 0 if self.all_ok() else 1

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "checks": [c.to_dict(timings) for c in self.checks],
            "summary": self.summary(),
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2)

    def human_table(self) -> str:
        rows = [f"{'check':<44} {'kind':<15} {'status':<8} verdict"]
        rows.append("-" * 100)
        for c in self.checks:
            if c.skipped:
                status = "SKIP"
            elif c.error is not None:
                status = "ERROR"
            else:
                status = "ok" if c.ok else "MISMATCH"
            verdict = c.error if c.error is not None else json.dumps(jsonable(c.verdict))
            if len(verdict) > 60:
                verdict = verdict[:57] + "..."
            rows.append(f"{c.name:<44} {c.kind:<15} {status:<8} {verdict}")
        s = self.summary()
        rows.append("-" * 100)
        rows.append(
            f"{s['total']} checks: {s['passed']} passed, {s['mismatched']} mismatched, "
            f"{s['errors']} errors, {s['skipped']} skipped"
        )
        return "\n".join(rows)
