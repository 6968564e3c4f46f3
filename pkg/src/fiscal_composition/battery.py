"""Run the full validation battery and assemble the replication bundle."""

from __future__ import annotations

from dataclasses import dataclass

from . import bundle
from .config import RunConfig
from .validation import (
    TestReport,
    TestResult,
    run_deterministic_suite,
    run_mc_suite,
    run_sensitivity_suite,
    run_symbolic_suite,
)
from .validation.montecarlo import DrawRecord, MonteCarloSummary


@dataclass
class BatteryResult:
    report: TestReport
    summary: MonteCarloSummary
    records: list[DrawRecord]
    archive: bytes  # bundle built from the complete report


def run_battery(cfg: RunConfig | None = None, grid_size: int = 51) -> BatteryResult:
    """Run SYM, DET, SENS and MC suites, then check bundle generation (OUT-01)."""
    cfg = RunConfig() if cfg is None else cfg
    report = TestReport()
    report.extend(run_symbolic_suite(seed=cfg.seed))
    report.extend(run_deterministic_suite(cfg.model, seed=cfg.seed))
    report.extend(run_sensitivity_suite(cfg.model, grid_size=grid_size))
    mc_results, summary, records = run_mc_suite(cfg.mc, workers=cfg.workers)
    report.extend(mc_results)

    files = bundle.collect_files(cfg, report, summary, records)
    problems = bundle.verify_archive(bundle.build_archive(files), files)
    rerun = bundle.build_archive(files) == bundle.build_archive(files)
    ok = not problems and rerun
    details = "ZIP package generated" if ok else "; ".join(problems) or "archive not deterministic"
    report.add(TestResult("OUT-01", "Output ZIP package generated", ok,
                          f"{details} ({len(files) + 1} files)" if ok else details))

    final_files = bundle.collect_files(cfg, report, summary, records)
    return BatteryResult(report, summary, records, bundle.build_archive(final_files))
