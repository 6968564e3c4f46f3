"""Run configuration and its INI-style text format.

A config file has one section per concern::

    [model]          ModelParams fields (structural plus closure)
    [montecarlo]     n_draws, stress_draws, seed, workers
    [ranges]         name = lo, hi   (main Monte Carlo supports)
    [stress_ranges]  name = lo, hi   (stress-test supports)
    [output]         out_dir, csv

Every key is optional; missing keys take their defaults.  Unknown sections or
keys are rejected.  ``parse(render(cfg)) == cfg`` for every valid config.
"""

from __future__ import annotations

import configparser
import dataclasses
from dataclasses import dataclass, field

from .errors import ConfigError, ParameterError
from .simulator import PARAMETERS, PARAMETER_RANGES, ModelParams
from .validation.montecarlo import DEFAULT_SEED, STRESS_RANGES, MonteCarloConfig

MODEL_FIELDS = tuple(f.name for f in dataclasses.fields(ModelParams))
INT_FIELDS = {"T"}


@dataclass(frozen=True)
class RunConfig:
    model: ModelParams = field(default_factory=ModelParams)
    n_draws: int = 3000
    stress_draws: int = 500
    seed: int = DEFAULT_SEED
    workers: int = 1
    ranges: dict = field(default_factory=lambda: dict(PARAMETER_RANGES))
    stress_ranges: dict = field(default_factory=lambda: dict(STRESS_RANGES))
    out_dir: str = "results"
    csv: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        try:
            self.mc
        except ParameterError as exc:
            raise ConfigError(str(exc)) from exc

    @property
    def mc(self) -> MonteCarloConfig:
        return MonteCarloConfig(
            n_draws=self.n_draws, stress_draws=self.stress_draws, seed=self.seed,
            ranges=dict(self.ranges), stress_ranges=dict(self.stress_ranges), base=self.model,
        )

    def replace(self, **changes) -> "RunConfig":
        return dataclasses.replace(self, **changes)


def _fmt(x) -> str:
    return repr(x) if isinstance(x, float) else str(x)


def render(cfg: RunConfig) -> str:
    """Canonical text form of ``cfg``."""
    lines = ["[model]"]
    lines += [f"{name} = {_fmt(getattr(cfg.model, name))}" for name in MODEL_FIELDS]
    lines += ["", "[montecarlo]",
              f"n_draws = {cfg.n_draws}", f"stress_draws = {cfg.stress_draws}",
              f"seed = {cfg.seed}", f"workers = {cfg.workers}"]
    for section, ranges in (("ranges", cfg.ranges), ("stress_ranges", cfg.stress_ranges)):
        lines += ["", f"[{section}]"]
        lines += [f"{name} = {_fmt(float(lo))}, {_fmt(float(hi))}" for name, (lo, hi) in ranges.items()]
    lines += ["", "[output]", f"out_dir = {cfg.out_dir}", f"csv = {str(cfg.csv).lower()}"]
    return "\n".join(lines) + "\n"


def _number(section, key, text, kind=float):
    try:
        return kind(text)
    except ValueError:
        raise ConfigError(f"[{section}] {key}: cannot parse {text!r} as {kind.__name__}") from None


def _parse_range(section, key, text):
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 2:
        raise ConfigError(f"[{section}] {key}: expected 'lo, hi', got {text!r}")
    return (_number(section, key, parts[0]), _number(section, key, parts[1]))


def parse(text: str) -> RunConfig:
    """Parse config text; raises :class:`ConfigError` naming any offending key."""
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str  # keys are case-sensitive (mu_C, Y0, T)
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from exc

    known = {"model", "montecarlo", "ranges", "stress_ranges", "output"}
    for section in cp.sections():
        if section not in known:
            raise ConfigError(f"unknown section [{section}]")

    def check_keys(section, allowed):
        if cp.has_section(section):
            for key in cp[section]:
                if key not in allowed:
                    raise ConfigError(f"unknown key {key!r} in [{section}]")

    check_keys("model", MODEL_FIELDS)
    check_keys("montecarlo", {"n_draws", "stress_draws", "seed", "workers"})
    check_keys("ranges", PARAMETERS)
    check_keys("stress_ranges", PARAMETERS)
    check_keys("output", {"out_dir", "csv"})

    kw = {}
    if cp.has_section("model"):
        values = {k: _number("model", k, v, int if k in INT_FIELDS else float)
                  for k, v in cp["model"].items()}
        try:
            kw["model"] = ModelParams().replace(**values)
        except ParameterError as exc:
            raise ConfigError(f"[model] {exc}") from exc
    if cp.has_section("montecarlo"):
        for k, v in cp["montecarlo"].items():
            kw[k] = _number("montecarlo", k, v, int)
    for section in ("ranges", "stress_ranges"):
        if cp.has_section(section):
            base = dict(PARAMETER_RANGES if section == "ranges" else STRESS_RANGES)
            base.update({k: _parse_range(section, k, v) for k, v in cp[section].items()})
            kw[section] = base
    if cp.has_section("output"):
        out = cp["output"]
        if "out_dir" in out:
            kw["out_dir"] = out["out_dir"]
        if "csv" in out:
            try:
                kw["csv"] = out.getboolean("csv")
            except ValueError:
                raise ConfigError(f"[output] csv: not a boolean: {out['csv']!r}") from None
    return RunConfig(**kw)


def load(path) -> RunConfig:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
