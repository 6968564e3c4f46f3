"""One-parameter monotonicity sweeps (SENS-01..04)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from ..simulator import SCENARIOS, ModelParams, simulate
from .report import TestResult

TIE_TOL = 1e-12


@dataclass(frozen=True)
class Sweep:
    parameter: str
    scenario: str
    metric: str  # "pv" or "impact"
    direction: int  # +1 non-decreasing, -1 non-increasing
    lo: float
    hi: float

    @property
    def column(self) -> str:
        return f"{self.scenario}_{'pv' if self.metric == 'pv' else 'impact'}"


SWEEPS = {
    "phi": Sweep("phi", "public_investment", "pv", +1, 0.0, 1.0),
    "mu_I": Sweep("mu_I", "public_investment", "pv", -1, 0.02, 0.90),
    "d0": Sweep("d0", "current_spending", "pv", -1, 0.15, 1.50),
    "m": Sweep("m", "current_spending", "impact", -1, 0.02, 0.55),
}


def sweep(p: ModelParams, parameter: str, values) -> np.ndarray:
    """Target metric of ``parameter``'s sweep evaluated at each value."""
    if parameter not in SWEEPS:
        raise ParameterError(f"unknown sweep parameter {parameter!r}; expected one of {sorted(SWEEPS)}")
    sw = SWEEPS[parameter]
    scenario = next(s for s in SCENARIOS if s.name == sw.scenario)
    out = []
    for v in values:
        path = simulate(p.replace(**{parameter: float(v)}), scenario)
        out.append(path.pv_y if sw.metric == "pv" else path.impact)
    return np.array(out)


def is_monotone(y, direction: int, tol: float = TIE_TOL) -> bool:
    d = np.diff(np.asarray(y, dtype=float))
    return bool(np.all(direction * d >= -tol))


def run_sensitivity_suite(p: ModelParams | None = None, grid_size: int = 51) -> list[TestResult]:
    if grid_size < 10:
        raise ParameterError(f"grid_size must be >= 10, got {grid_size}")
    p = ModelParams() if p is None else p
    rows = [
        ("SENS-01", "Investment PV is non-decreasing in phi", "phi", "phi sweep"),
        ("SENS-02", "Investment PV is non-increasing in mu_i", "mu_I", "mu_i sweep"),
        ("SENS-03", "Current-spending PV is non-increasing in debt ratio", "d0", "debt sweep"),
        ("SENS-04", "Current-spending impact is non-increasing in openness", "m", "openness sweep"),
    ]
    out = []
    for test_id, name, param, label in rows:
        sw = SWEEPS[param]
        xs = np.linspace(sw.lo, sw.hi, grid_size)
        ys = sweep(p, param, xs)
        out.append(TestResult(test_id, name, is_monotone(ys, sw.direction),
                              f"{label}; {grid_size} points, {ys[0]:.4f} -> {ys[-1]:.4f}"))
    return out
