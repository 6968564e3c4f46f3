"""Command-line front end.

Subcommands::

    validate   run the 42-check battery and print the report
    baseline   impact and PV by composition; --csv writes per-scenario paths
    mc         Monte Carlo summary; --csv writes per-draw records
    sweep      one-parameter sensitivity sweep as CSV
    export     write the replication zip

Exit status: 0 success, 1 validation failure, 2 usage or config error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bundle
from . import config as config_mod
from .battery import run_battery
from .errors import ConfigError, ParameterError
from .simulator import path_to_csv, run_scenarios
from .validation.montecarlo import records_to_csv, run_monte_carlo, summary_rows
from .validation.report import emit_report
from .validation.sensitivity import SWEEPS

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2
EXIT_IO = 3

BUNDLE_NAME = "replication_bundle.zip"


def _common(p: argparse.ArgumentParser):
    p.add_argument("--config", metavar="PATH", help="INI config file (default: built-in baseline calibration)")
    p.add_argument("--seed", type=int, help="Monte Carlo seed")
    p.add_argument("--draws", type=int, help="number of Monte Carlo draws")
    p.add_argument("--horizon", type=int, help="simulation horizon T in periods")
    p.add_argument("--out", metavar="DIR", help="output directory")
    p.add_argument("--csv", action="store_true", help="write delimited output files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fiscal-composition", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("validate", "run the full validation battery"),
        ("baseline", "equal-aggregate impulse by composition"),
        ("mc", "Monte Carlo and stress-test summary"),
        ("export", "write the replication zip archive"),
    ]:
        _common(sub.add_parser(name, help=help_))
    sp = sub.add_parser("sweep", help="sensitivity sweep of one parameter")
    sp.add_argument("parameter", choices=sorted(SWEEPS))
    sp.add_argument("lo", type=float)
    sp.add_argument("hi", type=float)
    sp.add_argument("steps", type=int)
    _common(sp)
    return parser


def load_config(args) -> config_mod.RunConfig:
    cfg = config_mod.load(args.config) if args.config else config_mod.RunConfig()
    changes = {}
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.draws is not None:
        changes["n_draws"] = args.draws
    if args.out is not None:
        changes["out_dir"] = args.out
    if args.csv:
        changes["csv"] = True
    if args.horizon is not None:
        try:
            changes["model"] = cfg.model.replace(T=args.horizon)
        except ParameterError as exc:
            raise ConfigError(str(exc)) from exc
    return cfg.replace(**changes) if changes else cfg


def _out_dir(cfg) -> Path:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write(path: Path, data):
    if isinstance(data, bytes):
        path.write_bytes(data)
    else:
        path.write_text(data, encoding="utf-8", newline="")


def cmd_validate(cfg, args, stdout) -> int:
    result = run_battery(cfg)
    stdout.write(emit_report(result.report, "table"))
    if args.out:
        out = _out_dir(cfg)
        _write(out / "report.txt", emit_report(result.report, "table"))
    return EXIT_OK if result.report.all_passed and len(result.report) == 42 else EXIT_VALIDATION


def cmd_baseline(cfg, args, stdout) -> int:
    paths = run_scenarios(cfg.model)
    width = max(len(n) for n in paths)
    stdout.write(f"{'Composition':<{width}}  {'Impact':>8}  {'PV(Y)':>8}\n")
    for name, path in paths.items():
        stdout.write(f"{name:<{width}}  {path.impact:>8.4f}  {path.pv_y:>8.4f}\n")
    if cfg.csv:
        out = _out_dir(cfg)
        _write(out / "baseline_compositions.csv", bundle.baseline_csv(cfg.model))
        for name, path in paths.items():
            _write(out / f"path_{name}.csv", path_to_csv(path))
    return EXIT_OK


def cmd_mc(cfg, args, stdout) -> int:
    summary, records = run_monte_carlo(cfg.mc, workers=cfg.workers, return_records=True)
    rows = summary_rows(summary, cfg.stress_draws)
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        stdout.write(f"{k:<{width}}  {v:>10}\n")
    if cfg.csv:
        _write(_out_dir(cfg) / "mc_draws.csv", records_to_csv(records))
    return EXIT_OK


def cmd_sweep(cfg, args, stdout) -> int:
    if args.steps < 2:
        raise ConfigError(f"steps must be >= 2, got {args.steps}")
    if not args.lo < args.hi:
        raise ConfigError(f"need lo < hi, got {args.lo} >= {args.hi}")
    text = bundle.sweep_csv(cfg.model, args.parameter, args.lo, args.hi, args.steps)
    if args.out:
        _write(_out_dir(cfg) / f"sweep_{args.parameter}.csv", text)
    stdout.write(text)
    return EXIT_OK


def cmd_export(cfg, args, stdout) -> int:
    result = run_battery(cfg)
    target = _out_dir(cfg) / BUNDLE_NAME
    _write(target, result.archive)
    stdout.write(f"wrote {target} ({len(result.archive)} bytes); "
                 f"{result.report.n_passed}/{len(result.report)} checks passed\n")
    return EXIT_OK if result.report.all_passed else EXIT_VALIDATION


COMMANDS = {
    "validate": cmd_validate,
    "baseline": cmd_baseline,
    "mc": cmd_mc,
    "sweep": cmd_sweep,
    "export": cmd_export,
}


def main(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        return COMMANDS[args.command](cfg, args, stdout)
    except (ConfigError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
