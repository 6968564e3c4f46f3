"""Deviation-path simulator for equal-aggregate fiscal impulses of different composition.

The economy starts in a normalized steady state (``Y0 = Kg0 = 100``) and every
state variable is tracked as a deviation from it.  A one-period impulse of
``shock`` spending units is split across four instruments; per period ``t``::

    dYstar_t = psi (Y0/Kg0) dKg_t
    dY_t     = demand_t / D + (zeta dKg_t + dYstar_t) / D - rho_drag dB_t
    dKg_t+1  = (1 - delta_g) dKg_t + phi investment_t
    nx_t     = -fiscal_imports_t - n_x dY_t + chi dKg_t
    dB_t+1   = (1 + r) dB_t + fiscal_cost_t - tau dY_t
    pi_t     = lambda_pi (dY_t - dYstar_t)

with ``D = 1 - cbar + m + omega_f + omega_rho + omega_d max(d0 - d_bar, 0)``.
Only ``dY`` feeds back (through taxes into debt and through debt into the risk
drag); ``nx`` and ``pi`` are diagnostics.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np
from scipy.optimize import brentq

from . import instruments
from .errors import NonFinitePathError, NonPositiveDenominatorError, ParameterError

INSTRUMENTS = ("current_spending", "public_investment", "poor_transfer", "rich_transfer")

# Baseline value and admissible Monte Carlo range of every structural parameter.
PARAMETERS = {
    "beta": (0.96, (0.90, 0.985)),
    "cbar": (0.68, (0.48, 0.88)),
    "m": (0.22, (0.02, 0.55)),
    "omega_f": (0.18, (0.0, 0.70)),
    "omega_rho": (0.05, (0.0, 0.40)),
    "mu_C": (0.22, (0.02, 0.70)),
    "mu_I": (0.28, (0.02, 0.90)),
    "mu_p": (0.18, (0.02, 0.80)),
    "mu_r": (0.36, (0.02, 0.80)),
    "c_p": (0.90, (0.65, 0.98)),
    "c_r": (0.45, (0.15, 0.70)),
    "phi": (0.75, (0.0, 1.0)),
    "psi": (0.12, (0.0, 0.25)),
    "delta_g": (0.07, (0.02, 0.18)),
    "zeta": (0.08, (0.0, 0.20)),
    "chi": (0.02, (-0.02, 0.08)),
    "tau": (0.18, (0.08, 0.32)),
    "d0": (0.60, (0.15, 1.50)),
}
PARAMETER_RANGES = {name: rng for name, (_, rng) in PARAMETERS.items()}

# Closure calibrated so the simulated investment PV equals 12.3783792471 at r = 0.03:
# 0.015 output units per unit of debt-to-baseline-output ratio, i.e. 1.5e-4 per debt unit.
DEFAULT_RHO_DRAG = 1.5e-4


@dataclass(frozen=True)
class ModelParams:
    """Structural parameters plus the closure needed to run the simulator."""

    beta: float = 0.96
    cbar: float = 0.68
    m: float = 0.22
    omega_f: float = 0.18
    omega_rho: float = 0.05
    mu_C: float = 0.22
    mu_I: float = 0.28
    mu_p: float = 0.18
    mu_r: float = 0.36
    c_p: float = 0.90
    c_r: float = 0.45
    phi: float = 0.75
    psi: float = 0.12
    delta_g: float = 0.07
    zeta: float = 0.08
    chi: float = 0.02
    tau: float = 0.18
    d0: float = 0.60
    # closure
    omega_d: float = 1.0
    d_bar: float = 0.60
    rho_drag: float = DEFAULT_RHO_DRAG
    r: float = 0.03
    n_x: float = 0.1
    lambda_pi: float = 0.1
    Y0: float = 100.0
    Kg0: float = 100.0
    T: int = 20
    shock: float = 5.0

    def __post_init__(self):
        self.validate()

    def validate(self, check_ranges: bool = False) -> None:
        """Check admissibility; with ``check_ranges`` also the parameter ranges."""
        for f in dataclasses.fields(self):
            x = getattr(self, f.name)
            if not math.isfinite(x):
                raise ParameterError(f"{f.name} must be finite, got {x}")
        for name in ("mu_C", "mu_I", "mu_p", "mu_r", "c_p", "c_r", "phi"):
            x = getattr(self, name)
            if not 0 <= x <= 1:
                raise ParameterError(f"{name} must lie in [0, 1], got {x}")
        if not 0 < self.beta < 1:
            raise ParameterError(f"beta must lie in (0, 1), got {self.beta}")
        if not 0 <= self.cbar < 1:
            raise ParameterError(f"cbar must lie in [0, 1), got {self.cbar}")
        if not 0 <= self.delta_g < 1:
            raise ParameterError(f"delta_g must lie in [0, 1), got {self.delta_g}")
        for name in ("m", "omega_f", "omega_rho", "psi", "zeta", "d0", "omega_d", "rho_drag"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be non-negative, got {getattr(self, name)}")
        if int(self.T) != self.T or self.T < 1:
            raise ParameterError(f"horizon T must be an integer >= 1, got {self.T}")
        if not self.shock > 0:
            raise ParameterError(f"shock must be positive, got {self.shock}")
        if not (self.Y0 > 0 and self.Kg0 > 0):
            raise ParameterError("Y0 and Kg0 must be positive")
        if self.denominator <= 0:
            raise NonPositiveDenominatorError(f"denominator D = {self.denominator} must be positive")
        if check_ranges:
            for name, (lo, hi) in PARAMETER_RANGES.items():
                x = getattr(self, name)
                if not lo <= x <= hi:
                    raise ParameterError(f"{name}={x} outside its range [{lo}, {hi}]")

    @property
    def debt_term(self) -> float:
        return self.omega_d * max(self.d0 - self.d_bar, 0.0)

    @property
    def denominator(self) -> float:
        return 1 - self.cbar + self.m + self.omega_f + self.omega_rho + self.debt_term

    def replace(self, **changes) -> "ModelParams":
        return dataclasses.replace(self, **changes)

    def absorption(self) -> instruments.AbsorptionParams:
        return instruments.AbsorptionParams(
            mu_C=self.mu_C, mu_I=self.mu_I, mu_p=self.mu_p, mu_r=self.mu_r,
            c_p=self.c_p, c_r=self.c_r, cbar=self.cbar, m=self.m,
            omega_f=self.omega_f, omega_rho=self.omega_rho,
        )

    def capital(self, S: int | None = None) -> instruments.CapitalParams:
        """Capital block over ``S`` future periods (default: the rest of the horizon)."""
        return instruments.CapitalParams(
            phi=self.phi, psi=self.psi, delta_g=self.delta_g, zeta=self.zeta,
            beta=self.beta, ybar_k=self.Y0 / self.Kg0, S=self.T - 1 if S is None else S,
        )

    def absorption_coefficients(self) -> np.ndarray:
        """Domestic absorption per spending unit, ordered as :data:`INSTRUMENTS`."""
        return np.array([
            1 - self.mu_C,
            1 - self.mu_I,
            self.c_p * (1 - self.mu_p),
            self.c_r * (1 - self.mu_r),
        ])

    def import_coefficients(self) -> np.ndarray:
        return np.array([
            self.mu_C,
            self.mu_I,
            self.c_p * self.mu_p,
            self.c_r * self.mu_r,
        ])


@dataclass(frozen=True)
class Scenario:
    """A named composition of the one-period fiscal impulse."""

    name: str
    weights: tuple[float, float, float, float]
    shock_period: int = 0

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        if len(w) != len(INSTRUMENTS):
            raise ParameterError(f"need {len(INSTRUMENTS)} weights, got {len(w)}")
        if abs(sum(w) - 1) > 1e-12:
            raise ParameterError(f"weights of {self.name!r} sum to {sum(w)}, not 1")
        if self.shock_period < 0:
            raise ParameterError("shock_period must be non-negative")
        object.__setattr__(self, "weights", w)

    @classmethod
    def pure(cls, instrument: str) -> "Scenario":
        if instrument not in INSTRUMENTS:
            raise ParameterError(f"unknown instrument {instrument!r}; expected one of {INSTRUMENTS}")
        w = [0.0] * len(INSTRUMENTS)
        w[INSTRUMENTS.index(instrument)] = 1.0
        return cls(instrument, tuple(w))


SCENARIOS = (
    Scenario.pure("current_spending"),
    Scenario.pure("public_investment"),
    Scenario.pure("poor_transfer"),
    Scenario.pure("rich_transfer"),
    Scenario("mixed_policy", (0.25, 0.25, 0.25, 0.25)),
)
SCENARIO_NAMES = tuple(s.name for s in SCENARIOS)


@dataclass
class SimulationPath:
    """Per-period deviations from steady state for one scenario."""

    dY: np.ndarray
    dYstar: np.ndarray
    dKg: np.ndarray
    dB: np.ndarray
    nx: np.ndarray
    pi: np.ndarray
    demand: np.ndarray = field(repr=False)
    fiscal_imports: np.ndarray = field(repr=False)
    fiscal_cost: np.ndarray = field(repr=False)
    investment: np.ndarray = field(repr=False)
    pv_y: float = 0.0
    impact: float = 0.0
    name: str = ""

    @property
    def T(self) -> int:
        return len(self.dY)

    def columns(self) -> dict[str, np.ndarray]:
        return {"dY": self.dY, "dYstar": self.dYstar, "dKg": self.dKg,
                "dB": self.dB, "nx": self.nx, "pi": self.pi}


def simulate_amounts(p: ModelParams, amounts, shock_period: int = 0, name: str = "") -> SimulationPath:
    """Simulate an impulse given directly as spending per instrument.

    ``amounts`` is ordered as :data:`INSTRUMENTS` and need not sum to ``p.shock``;
    :func:`simulate` and :func:`finite_difference_impact` are built on it.
    """
    amounts = np.asarray(amounts, dtype=float)
    if amounts.shape != (len(INSTRUMENTS),):
        raise ParameterError(f"amounts must have {len(INSTRUMENTS)} entries")
    T = int(p.T)
    if not 0 <= shock_period < T:
        raise ParameterError(f"shock_period {shock_period} outside horizon 0..{T - 1}")
    D = p.denominator
    if not D > 0:
        raise NonPositiveDenominatorError(f"denominator D = {D} must be positive")

    impulse_demand = float(amounts @ p.absorption_coefficients())
    impulse_imports = float(amounts @ p.import_coefficients())
    impulse_invest = float(amounts[1])
    impulse_cost = float(amounts.sum())
    ykg = p.Y0 / p.Kg0

    cols = {k: [0.0] * T for k in ("dY", "dYstar", "dKg", "dB", "nx", "pi",
                                   "demand", "imports", "cost", "invest")}
    kg = 0.0
    debt = 0.0
    for t in range(T):
        hit = t == shock_period
        demand = impulse_demand if hit else 0.0
        invest = impulse_invest if hit else 0.0
        imports = impulse_imports if hit else 0.0
        cost = impulse_cost if hit else 0.0

        ystar = p.psi * ykg * kg
        y = demand / D + (p.zeta * kg + ystar) / D - p.rho_drag * debt

        cols["dY"][t] = y
        cols["dYstar"][t] = ystar
        cols["dKg"][t] = kg
        cols["dB"][t] = debt
        cols["nx"][t] = -imports - p.n_x * y + p.chi * kg
        cols["pi"][t] = p.lambda_pi * (y - ystar)
        cols["demand"][t] = demand
        cols["imports"][t] = imports
        cols["cost"][t] = cost
        cols["invest"][t] = invest

        kg = (1 - p.delta_g) * kg + p.phi * invest
        debt = (1 + p.r) * debt + cost - p.tau * y

    arr = {k: np.array(v) for k, v in cols.items()}
    for key in ("dY", "dYstar", "dKg", "dB", "nx", "pi"):
        bad = ~np.isfinite(arr[key])
        if bad.any():
            raise NonFinitePathError(
                f"{key} non-finite at periods {np.flatnonzero(bad).tolist()} "
                f"(scenario {name!r}, D={D}, amounts={amounts.tolist()})"
            )
    path = SimulationPath(
        dY=arr["dY"], dYstar=arr["dYstar"], dKg=arr["dKg"], dB=arr["dB"],
        nx=arr["nx"], pi=arr["pi"], demand=arr["demand"],
        fiscal_imports=arr["imports"], fiscal_cost=arr["cost"], investment=arr["invest"],
        name=name,
    )
    path.pv_y = present_value(path, p.beta)
    path.impact = float(path.dY[shock_period])
    return path


def simulate(p: ModelParams, s: Scenario) -> SimulationPath:
    """Simulate scenario ``s`` under parameters ``p``."""
    amounts = p.shock * np.asarray(s.weights)
    return simulate_amounts(p, amounts, s.shock_period, name=s.name)


def present_value(path: SimulationPath, beta: float) -> float:
    """Discounted sum ``sum_t beta^t dY_t`` over the stored horizon."""
    if not 0 < beta < 1:
        raise ParameterError(f"beta must lie in (0, 1), got {beta}")
    total = 0.0
    disc = 1.0
    for y in path.dY:
        total += disc * float(y)
        disc *= beta
    return total


def scalar_g_prediction(p: ModelParams) -> float:
    """Composition-blind impact prediction ``shock / D`` of a scalar-G model."""
    D = p.denominator
    if not D > 0:
        raise NonPositiveDenominatorError(f"denominator D = {D} must be positive")
    return p.shock / D


def finite_difference_impact(p: ModelParams, instrument: str, eps: float = 1e-6) -> float:
    """Forward-difference derivative of impact output in one instrument.

    The base point is the pure scenario for ``instrument`` at ``p.shock``.
    """
    if instrument not in INSTRUMENTS:
        raise ParameterError(f"unknown instrument {instrument!r}; expected one of {INSTRUMENTS}")
    if not eps >= 1e-9 * p.shock:
        raise ParameterError(f"step {eps} too small relative to shock {p.shock}")
    j = INSTRUMENTS.index(instrument)
    base = np.zeros(len(INSTRUMENTS))
    base[j] = p.shock
    bumped = base.copy()
    bumped[j] += eps
    y0 = simulate_amounts(p, base).impact
    y1 = simulate_amounts(p, bumped).impact
    return (y1 - y0) / eps


def analytic_impact_derivatives(p: ModelParams) -> dict[str, float]:
    """Closed-form impact multipliers per instrument."""
    a = p.absorption()
    D = p.denominator
    return {
        "current_spending": instruments.current_impact(a, D),
        "public_investment": instruments.investment_impact(a, D),
        "poor_transfer": instruments.transfer_impact(a.c_p, a.mu_p, D),
        "rich_transfer": instruments.transfer_impact(a.c_r, a.mu_r, D),
    }


def run_scenarios(p: ModelParams, scenarios: Iterable[Scenario] = SCENARIOS) -> dict[str, SimulationPath]:
    return {s.name: simulate(p, s) for s in scenarios}


def baseline_table(p: ModelParams | None = None) -> list[tuple[str, float, float]]:
    """Rows ``(scenario, impact, PV)`` for the five canonical compositions."""
    p = ModelParams() if p is None else p
    return [(name, path.impact, path.pv_y) for name, path in run_scenarios(p).items()]


def calibrate_drag(p: ModelParams, target_pv: float, scenario: str = "current_spending",
                   bracket: tuple[float, float] = (0.0, 1e-2)) -> float:
    """Solve for the risk-drag coefficient that makes ``scenario`` hit ``target_pv``."""
    s = next((x for x in SCENARIOS if x.name == scenario), None)
    if s is None:
        raise ParameterError(f"unknown scenario {scenario!r}")

    def gap(rho):
        return simulate(p.replace(rho_drag=rho), s).pv_y - target_pv

    return brentq(gap, *bracket, xtol=1e-16, rtol=1e-15, maxiter=200)


def path_to_csv(path: SimulationPath) -> str:
    """One row per period with columns ``t, dY, dYstar, dKg, dB, nx, pi``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    cols = path.columns()
    writer.writerow(["t", *cols])
    for t in range(path.T):
        writer.writerow([t, *(f"{cols[k][t]:.10f}" for k in cols)])
    return buf.getvalue()


def params_from_mapping(values: Mapping[str, float], base: ModelParams | None = None) -> ModelParams:
    """Build parameters from a partial mapping; unknown names raise :class:`ParameterError`."""
    base = ModelParams() if base is None else base
    names = {f.name for f in dataclasses.fields(ModelParams)}
    unknown = sorted(set(values) - names)
    if unknown:
        raise ParameterError(f"unknown parameter(s): {', '.join(unknown)}")
    changes = {k: (int(v) if k == "T" else float(v)) for k, v in values.items()}
    return base.replace(**changes)
