import json
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASSED, FAILED, SKIPPED, PARTIAL, ERROR = "passed", "failed", "skipped", "partial", "error"


@dataclass
class Failure:
    input: Any
    expected: Any
    got: Any
    witness: Any = None

    def to_dict(self) -> Dict[str, Any]:
        return {"input": self.input, "expected": self.expected, "got": self.got, "witness": self.witness}


@dataclass
class VerificationReport:
    """
    Outcome of one suite on one fixture.

    ``passed + len(failures) == cases_run`` always holds. ``status`` is set by
    :meth:`finish` unless the suite was skipped, partial or crashed.
    """
    suite: str
    fixture: str
    seed: int
    cases_run: int = 0
    passed: int = 0
    failures: List[Failure] = field(default_factory=list)
    elapsed_ms: float = 0.0
    status: Optional[str] = None
    reason: Optional[str] = None
    notes: List[str] = field(default_factory=list)
    _started: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    def check(self, ok: bool, input, expected=None, got=None, witness=None) -> bool:
        self.cases_run += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(Failure(_plain(input), _plain(expected), _plain(got), _plain(witness)))
        return ok

    def note(self, text: str):
        self.notes.append(text)

    def skip(self, reason: str) -> 'VerificationReport':
        self.status = SKIPPED
        self.reason = reason
        return self.finish()

    def partial(self, reason: str):
        self.status = PARTIAL
        self.reason = reason

    def error(self, reason: str) -> 'VerificationReport':
        self.status = ERROR
        self.reason = reason
        return self.finish()

    def finish(self) -> 'VerificationReport':
        self.elapsed_ms = round((time.perf_counter() - self._started) * 1000.0, 3)
        if self.status is None:
            self.status = FAILED if self.failures else PASSED
        elif self.status == PARTIAL and self.failures:
            self.status = FAILED
        return self

    @property
    def ok(self) -> bool:
        return self.status in (PASSED, SKIPPED)

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        data = {
            "suite": self.suite,
            "fixture": self.fixture,
            "cases_run": self.cases_run,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
            "seed": self.seed,
            "status": self.status,
            "reason": self.reason,
            "notes": list(self.notes),
        }
        if not include_timing:
            del data["elapsed_ms"]
        return data


def _plain(value):
    """Make witnesses JSON friendly: numpy scalars, tuples and sets become ints and lists."""
    if value is None or isinstance(value, (bool, str, float)):
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_plain(v) for v in items]
    if hasattr(value, "item"):
        return value.item()
    if isinstance(value, int):
        return int(value)
    return str(value)


def format_structured(reports: List[VerificationReport], include_timing: bool = True) -> str:
    """One JSON object per line, fields in a fixed order."""
    return "\n".join(json.dumps(r.to_dict(include_timing), ensure_ascii=False) for r in reports)


def format_text(reports: List[VerificationReport], include_timing: bool = True) -> str:
    header = ["suite", "fixture", "status", "passed", "cases"]
    if include_timing:
        header.append("ms")
    rows = []
    for r in reports:
        row = [r.suite, r.fixture, r.status, str(r.passed), str(r.cases_run)]
        if include_timing:
            row.append(f"{r.elapsed_ms:.1f}")
        rows.append(row)
    widths = [max(len(row[i]) for row in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in [header] + rows]
    for r in reports:
        if r.reason:
            lines.append(f"{r.suite} {r.fixture}: {r.reason}")
        for f in r.failures[:5]:
            lines.append(f"{r.suite} {r.fixture}: input={f.input} expected={f.expected} got={f.got} "
                         f"witness={f.witness}")
    total = sum(r.cases_run for r in reports)
    bad = sum(not r.ok for r in reports)
    lines.append(f"{len(reports)} reports, {total} cases, {bad} not passing")
    return "\n".join(lines)


def format_reports(reports: List[VerificationReport], fmt: str = "text", include_timing: bool = True) -> str:
    if fmt == "structured":
        return format_structured(reports, include_timing)
    if fmt == "text":
        return format_text(reports, include_timing)
    raise ValueError(f"unknown report format '{fmt}', expected text or structured")
