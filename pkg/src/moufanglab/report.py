"""Check records and report serialization (JSON with stable key order, or text table)."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CheckRecord:
    name: str
    samples: int
    max_residual: float
    mean_residual: float
    threshold: float
    verdict: str
    expected_failure: bool

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def make_record(name, residuals, threshold, expected_failure=False) -> CheckRecord:
    """Verdict rule: pass iff (max_residual <= threshold) XOR expected_failure."""
    arr = np.asarray(list(residuals), dtype=float)
    mx = float(arr.max())
    ok = (mx <= threshold) != expected_failure
    return CheckRecord(
        name=name,
        samples=int(arr.size),
        max_residual=mx,
        mean_residual=float(arr.mean()),
        threshold=float(threshold),
        verdict="pass" if ok else "fail",
        expected_failure=expected_failure,
    )


@dataclass(frozen=True)
class Report:
    meta: dict
    checks: list

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _record_dict(c: CheckRecord) -> dict:
    return {
        "name": c.name,
        "samples": c.samples,
        "max_residual": c.max_residual,
        "mean_residual": c.mean_residual,
        "threshold": c.threshold,
        "verdict": c.verdict,
        "expected_failure": c.expected_failure,
    }


def report_to_json(report: Report) -> str:
    doc = {"meta": report.meta, "checks": [_record_dict(c) for c in report.checks]}
    return json.dumps(doc, indent=2) + "\n"


def report_to_table(report: Report) -> str:
    cfg = report.meta.get("config", {})
    lines = [
        "loop={loop}  samples={samples}  seed={seed}  radius={radius}  tol={tol}  diff={diff}".format(**cfg),
        "",
        f"{'check':<28} {'n':>6} {'max_residual':>13} {'mean_residual':>14} {'threshold':>10} {'xfail':>5}  verdict",
    ]
    lines.append("-" * len(lines[-1]))
    for c in report.checks:
        lines.append(
            f"{c.name:<28} {c.samples:>6} {c.max_residual:>13.3e} {c.mean_residual:>14.3e} "
            f"{c.threshold:>10.1e} {'yes' if c.expected_failure else 'no':>5}  {c.verdict}"
        )
    n_pass = sum(1 for c in report.checks if c.passed)
    lines.append("-" * len(lines[2]))
    lines.append(f"{n_pass}/{len(report.checks)} checks passed  ({report.meta.get('wall_time_s', 0.0):.2f}s)")
    return "\n".join(lines) + "\n"
