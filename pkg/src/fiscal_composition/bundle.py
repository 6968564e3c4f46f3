"""Deterministic replication archive.

The zip layout is fixed::

    MANIFEST.txt                 file list with SHA-256 digests
    config.ini                   the run configuration
    report.txt, report.csv       validation battery
    baseline_compositions.csv          impact and PV by composition
    montecarlo_summary.csv        Monte Carlo summary
    paths/<scenario>.csv         per-period deviations, five scenarios
    sweeps/<parameter>.csv       sensitivity sweeps (phi, mu_I, d0, m)
    mc_draws.csv                 one row per Monte Carlo draw

Entries are written in sorted order with a fixed timestamp and permissions, so
identical inputs give byte-identical archives.
"""

from __future__ import annotations

import csv
import hashlib
import io
import zipfile

import numpy as np

from . import config as config_mod
from .simulator import run_scenarios, path_to_csv
from .validation.montecarlo import records_to_csv, summary_rows
from .validation.report import emit_report
from .validation.sensitivity import SWEEPS, sweep

FIXED_DATE = (1980, 1, 1, 0, 0, 0)
SWEEP_POINTS = 51


def _rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def baseline_csv(p) -> str:
    paths = run_scenarios(p)
    return _rows_to_csv(["composition", "impact", "pv_y"],
                        [(k, f"{v.impact:.4f}", f"{v.pv_y:.4f}") for k, v in paths.items()])


def sweep_csv(p, parameter, lo, hi, steps) -> str:
    xs = np.linspace(lo, hi, steps)
    ys = sweep(p, parameter, xs)
    return _rows_to_csv([parameter, SWEEPS[parameter].column],
                        [(f"{x:.10f}", f"{y:.10f}") for x, y in zip(xs, ys)])


def collect_files(cfg, report, summary, records) -> dict[str, str]:
    """All bundle members as ``{archive name: text}``, without the manifest."""
    p = cfg.model
    files = {
        # the output location does not affect results; keep archives comparable across directories
        "config.ini": config_mod.render(cfg.replace(out_dir=".")),
        "report.txt": emit_report(report, "table"),
        "report.csv": emit_report(report, "csv"),
        "baseline_compositions.csv": baseline_csv(p),
        "montecarlo_summary.csv": _rows_to_csv(["statistic", "value"], summary_rows(summary, cfg.stress_draws)),
        "mc_draws.csv": records_to_csv(records),
    }
    for name, path in run_scenarios(p).items():
        files[f"paths/{name}.csv"] = path_to_csv(path)
    for name, sw in SWEEPS.items():
        files[f"sweeps/{name}.csv"] = sweep_csv(p, name, sw.lo, sw.hi, SWEEP_POINTS)
    return files


def manifest(files: dict[str, str]) -> str:
    lines = [f"{hashlib.sha256(files[n].encode()).hexdigest()}  {n}" for n in sorted(files)]
    return "\n".join(lines) + "\n"


def build_archive(files: dict[str, str]) -> bytes:
    """Zip ``files`` plus a manifest deterministically; returns the archive bytes."""
    members = dict(files)
    members["MANIFEST.txt"] = manifest(files)
    buf = io.BytesIO()
    with zipfile.ZipFile(buf, "w", zipfile.ZIP_DEFLATED) as zf:
        for name in sorted(members):
            info = zipfile.ZipInfo(name, date_time=FIXED_DATE)
            info.compress_type = zipfile.ZIP_DEFLATED
            info.external_attr = 0o644 << 16
            zf.writestr(info, members[name].encode("utf-8"))
    return buf.getvalue()


def verify_archive(data: bytes, expected: dict[str, str]) -> list[str]:
    """Problems found in an archive (empty when it is complete and intact)."""
    problems = []
    try:
        with zipfile.ZipFile(io.BytesIO(data)) as zf:
            bad = zf.testzip()
            if bad:
                problems.append(f"corrupt member {bad}")
            names = set(zf.namelist())
            for name, text in expected.items():
                if name not in names:
                    problems.append(f"missing {name}")
                elif zf.read(name).decode("utf-8") != text:
                    problems.append(f"content mismatch in {name}")
            if "MANIFEST.txt" not in names:
                problems.append("missing MANIFEST.txt")
    except zipfile.BadZipFile as exc:
        problems.append(f"not a zip archive: {exc}")
    return problems
