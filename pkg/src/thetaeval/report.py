"""Verification records, run configuration, and report serialization.

A VerificationRecord is one checked equality.  The pass flag is always
recomputed from the stored numbers (abs_error <= combined_bound +
tolerance) so a record cannot disagree with its own fields.  JSON output
is rendered by hand: fixed key order and 17-significant-digit decimals
make two runs byte-identical apart from the runtime_ms fields.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

REPORT_VERSION = "1.0.0"

SUITE_NAMES = (
    "triple-product",
    "two-squares",
    "integral",
    "special-values",
    "epstein",
    "kronecker",
    "theta",
)

DEFAULT_FORMS = ((1.0, 0.0, 1.0), (2.0, -2.0, 1.0), (1.0, 0.0, 2.0), (1.0, 1.0, 1.0))


@dataclass(frozen=True)
class VerificationRecord:
    """One checked identity: the two sides, their gap, and the verdict."""

    name: str
    paper_anchor: str
    lhs: float
    rhs: float
    abs_error: float
    combined_bound: float
    tolerance: float
    passed: bool
    runtime_ms: int

    def __post_init__(self):
        if self.abs_error != abs(self.lhs - self.rhs):
            raise ValueError("abs_error must equal |lhs - rhs|")
        if self.passed != (self.abs_error <= self.combined_bound + self.tolerance):
            raise ValueError("pass flag inconsistent with stored numbers")


def make_record(name: str, paper_anchor: str, lhs: float, rhs: float,
                combined_bound: float, tolerance: float,
                runtime_ms: int = 0) -> VerificationRecord:
    """Build a record, deriving abs_error and the pass flag."""
    err = abs(lhs - rhs)
    return VerificationRecord(
        name=name,
        paper_anchor=paper_anchor,
        lhs=lhs,
        rhs=rhs,
        abs_error=err,
        combined_bound=combined_bound,
        tolerance=tolerance,
        passed=err <= combined_bound + tolerance,
        runtime_ms=runtime_ms,
    )


def timed_record(name: str, paper_anchor: str, tolerance: float, builder) -> VerificationRecord:
    """Run builder() -> (lhs, rhs, combined_bound) and attach the wall time."""
    start = time.perf_counter()
    lhs, rhs, combined_bound = builder()
    elapsed_ms = int(round(1000.0 * (time.perf_counter() - start)))
    return make_record(name, paper_anchor, lhs, rhs, combined_bound,
                       tolerance, elapsed_ms)


@dataclass
class RunConfig:
    """Knobs for one verification run."""

    suites: tuple[str, ...] = SUITE_NAMES
    qseries_order: int = 256          # also the n-range of the two-squares suite
    forms: tuple[tuple[float, float, float], ...] = DEFAULT_FORMS
    tol_overrides: dict[str, float] = field(default_factory=dict)
    output_path: str | None = None
    output_format: str = "json"

    def __post_init__(self):
        for s in self.suites:
            if s not in SUITE_NAMES:
                raise ValueError(f"unknown suite {s!r}")
        if not (isinstance(self.qseries_order, int) and self.qseries_order >= 16):
            raise ValueError(f"order must be an integer >= 16, got {self.qseries_order!r}")
        for a, b, c in self.forms:
            if not (a > 0.0 and 4.0 * a * c - b * b > 0.0):
                raise ValueError(f"form ({a}, {b}, {c}) is not positive definite")
        if self.output_format not in ("json", "markdown"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        for name, tol in self.tol_overrides.items():
            if not (tol >= 0.0 and math.isfinite(tol)):
                raise ValueError(f"tolerance override {name}={tol} must be finite and >= 0")

    def tolerance(self, name: str, default: float) -> float:
        return self.tol_overrides.get(name, default)


def _float_text(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"reports cannot serialize {x}")
    return format(x, ".17g")


def _record_json(r: VerificationRecord) -> str:
    parts = [
        f'"name": {json.dumps(r.name)}',
        f'"paper_anchor": {json.dumps(r.paper_anchor)}',
        f'"lhs": {_float_text(r.lhs)}',
        f'"rhs": {_float_text(r.rhs)}',
        f'"abs_error": {_float_text(r.abs_error)}',
        f'"combined_bound": {_float_text(r.combined_bound)}',
        f'"tolerance": {_float_text(r.tolerance)}',
        f'"pass": {"true" if r.passed else "false"}',
        f'"runtime_ms": {r.runtime_ms}',
    ]
    return "{" + ", ".join(parts) + "}"


def render_json(records: list[VerificationRecord]) -> str:
    passed = sum(1 for r in records if r.passed)
    lines = [f'{{"version": {json.dumps(REPORT_VERSION)},', '"records": [']
    lines.append(",\n".join(_record_json(r) for r in records))
    lines.append("],")
    lines.append(f'"summary": {{"total": {len(records)}, "passed": {passed}, '
                 f'"failed": {len(records) - passed}}}}}')
    return "\n".join(lines) + "\n"


def render_markdown(records: list[VerificationRecord]) -> str:
    lines = [
        "| Name | Anchor | \\|lhs-rhs\\| | Bound+Tol | Pass |",
        "| --- | --- | --- | --- | --- |",
    ]
    for r in records:
        verdict = "pass" if r.passed else "FAIL"
        lines.append(f"| {r.name} | {r.paper_anchor} | {_float_text(r.abs_error)} "
                     f"| {_float_text(r.combined_bound + r.tolerance)} | {verdict} |")
    return "\n".join(lines) + "\n"


def emit_report(records: list[VerificationRecord], output_format: str,
                path: str | None) -> str:
    """Render the records; write to path when given.  Returns the text."""
    if output_format == "json":
        text = render_json(records)
    elif output_format == "markdown":
        text = render_markdown(records)
    else:
        raise ValueError(f"unknown output format {output_format!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
