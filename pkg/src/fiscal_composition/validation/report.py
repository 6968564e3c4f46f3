"""Test-report container and text rendering of the validation battery."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Iterator

CATALOG = (
    tuple(f"SYM-{i:02d}" for i in range(1, 7))
    + tuple(f"DET-{i:02d}" for i in range(1, 22))
    + tuple(f"SENS-{i:02d}" for i in range(1, 5))
    + tuple(f"MC-{i:02d}" for i in range(1, 11))
    + ("OUT-01",)
)

# Display order and labels of the per-family summary.
FAMILIES = (
    ("DET", "Deterministic adversarial cases and identities"),
    ("MC", "Monte Carlo and stress testing"),
    ("OUT", "Replication package generation"),
    ("SENS", "Sensitivity sweeps"),
    ("SYM", "Symbolic algebra and sufficiency"),
)
FAMILY_SIZES = {prefix: sum(1 for i in CATALOG if i.startswith(prefix + "-")) for prefix, _ in FAMILIES}

FORMATS = ("table", "csv")


@dataclass(frozen=True)
class TestResult:
    id: str
    name: str
    passed: bool
    details: str = ""

    __test__ = False  # not a pytest class

    def __post_init__(self):
        if self.id not in CATALOG:
            raise ValueError(f"unknown test id {self.id!r}")
        object.__setattr__(self, "passed", bool(self.passed))


class TestReport:
    """Ordered collection of :class:`TestResult` with unique ids."""

    __test__ = False

    def __init__(self, results: Iterable[TestResult] = ()):
        self._results: list[TestResult] = []
        self.extend(results)

    def add(self, result: TestResult) -> None:
        if any(r.id == result.id for r in self._results):
            raise ValueError(f"duplicate test id {result.id!r}")
        self._results.append(result)

    def extend(self, results: Iterable[TestResult]) -> None:
        for r in results:
            self.add(r)

    def __iter__(self) -> Iterator[TestResult]:
        return iter(self._results)

    def __len__(self) -> int:
        return len(self._results)

    def __getitem__(self, test_id: str) -> TestResult:
        for r in self._results:
            if r.id == test_id:
                return r
        raise KeyError(test_id)

    @property
    def all_passed(self) -> bool:
        return bool(self._results) and all(r.passed for r in self._results)

    @property
    def n_passed(self) -> int:
        return sum(r.passed for r in self._results)

    def family_summary(self) -> list[tuple[str, int, int]]:
        """``(family label, tests, passed)`` rows for families present in the report."""
        rows = []
        for prefix, label in FAMILIES:
            members = [r for r in self._results if r.id.startswith(prefix + "-")]
            if members:
                rows.append((label, len(members), sum(r.passed for r in members)))
        return rows


def _table(report: TestReport) -> str:
    id_w = max(4, *(len(r.id) for r in report))
    name_w = max(4, *(len(r.name) for r in report))
    lines = [f"{'Test':<{id_w}}  {'Name':<{name_w}}  {'Pass':<5}  Details"]
    lines.append("-" * len(lines[0]))
    for r in report:
        lines.append(f"{r.id:<{id_w}}  {r.name:<{name_w}}  {str(r.passed):<5}  {r.details}")
    summary = report.family_summary()
    fam_w = max(len("Test family"), *(len(s[0]) for s in summary))
    lines.append("")
    lines.append(f"{'Test family':<{fam_w}}  {'Tests':>5}  {'Passed':>6}")
    lines.append("-" * (fam_w + 15))
    for label, n, k in summary:
        lines.append(f"{label:<{fam_w}}  {n:>5}  {k:>6}")
    lines.append("-" * (fam_w + 15))
    lines.append(f"{'Total':<{fam_w}}  {len(report):>5}  {report.n_passed:>6}")
    return "\n".join(lines) + "\n"


def _delimited(report: TestReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["test", "name", "pass", "details"])
    for r in report:
        w.writerow([r.id, r.name, r.passed, r.details])
    w.writerow([])
    w.writerow(["family", "tests", "passed"])
    for label, n, k in report.family_summary():
        w.writerow([label, n, k])
    w.writerow(["Total", len(report), report.n_passed])
    return buf.getvalue()


def emit_report(report: TestReport, format: str = "table") -> str:
    """Render a report as an aligned plain-text table or as comma-separated text."""
    if len(report) == 0:
        raise ValueError("cannot render an empty report")
    if format == "table":
        return _table(report)
    if format == "csv":
        return _delimited(report)
    raise ValueError(f"unknown report format {format!r}; expected one of {FORMATS}")
