"""Instrument-specific multipliers of the fiscal-composition model.

Impact multipliers share the reduced-form denominator

    D = 1 - cbar + m + omega_f + omega_rho (+ debt-fragility term)

and differ only through domestic absorption: ``1 - mu_C`` for current purchases,
``1 - mu_I`` for investment and ``c_q (1 - mu_q)`` for a transfer to household
group ``q``.  Public investment additionally builds public capital, whose
discounted output effect over ``S`` periods is a finite geometric sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPositiveDenominatorError, ParameterError


def _unit(name, x):
    if not 0 <= x <= 1:
        raise ParameterError(f"{name} must lie in [0, 1], got {x}")


@dataclass(frozen=True)
class AbsorptionParams:
    """Import leakages, propensities to consume and denominator terms."""

    mu_C: float = 0.22
    mu_I: float = 0.28
    mu_p: float = 0.18
    mu_r: float = 0.36
    c_p: float = 0.90
    c_r: float = 0.45
    cbar: float = 0.68
    m: float = 0.22
    omega_f: float = 0.18
    omega_rho: float = 0.05

    def __post_init__(self):
        for name in ("mu_C", "mu_I", "mu_p", "mu_r", "c_p", "c_r"):
            _unit(name, getattr(self, name))
        if not 0 <= self.cbar < 1:
            raise ParameterError(f"cbar must lie in [0, 1), got {self.cbar}")


@dataclass(frozen=True)
class CapitalParams:
    """Public-capital block: efficiency, productivity, depreciation, discounting, horizon."""

    phi: float = 0.75
    psi: float = 0.12
    delta_g: float = 0.07
    zeta: float = 0.08
    beta: float = 0.96
    ybar_k: float = 1.0  # Y0 / Kg0 under the normalization Y0 = Kg0 = 100
    S: int = 19

    def __post_init__(self):
        _unit("phi", self.phi)
        if not 0 <= self.delta_g < 1:
            raise ParameterError(f"delta_g must lie in [0, 1), got {self.delta_g}")
        if not 0 < self.beta < 1:
            raise ParameterError(f"beta must lie in (0, 1), got {self.beta}")
        if self.psi < 0 or self.zeta < 0:
            raise ParameterError("psi and zeta must be non-negative")
        if not self.ybar_k > 0:
            raise ParameterError("ybar_k must be positive")
        if int(self.S) != self.S or self.S < 1:
            raise ParameterError(f"horizon S must be an integer >= 1, got {self.S}")


@dataclass(frozen=True)
class RiskParams:
    rho0: float = 0.0
    rho1: float = 0.0
    rho2: float = 0.0
    rho3: float = 0.0
    debt_to_gdp: float = 0.0
    extdebt_to_exports: float = 0.0
    sigma: float = 0.0

    def __post_init__(self):
        for name, x in vars(self).items():
            if not math.isfinite(x):
                raise ParameterError(f"{name} must be finite, got {x}")
        if min(self.rho1, self.rho2, self.rho3) < 0:
            raise ParameterError("rho1, rho2 and rho3 must be non-negative")


def _positive(D):
    if not D > 0:
        raise NonPositiveDenominatorError(f"denominator D = {D} must be positive")


def denominator(a: AbsorptionParams, debt_term: float = 0.0) -> float:
    """Reduced-form denominator ``1 - cbar + m + omega_f + omega_rho + debt_term``."""
    if debt_term < 0:
        raise ParameterError(f"debt_term must be non-negative, got {debt_term}")
    D = 1 - a.cbar + a.m + a.omega_f + a.omega_rho + debt_term
    _positive(D)
    return D


def current_impact(a: AbsorptionParams, D: float) -> float:
    _positive(D)
    return (1 - a.mu_C) / D


def transfer_impact(c_q: float, mu_q: float, D: float) -> float:
    """Impact multiplier ``c_q (1 - mu_q) / D`` of a transfer to one household group."""
    _unit("c_q", c_q)
    _unit("mu_q", mu_q)
    _positive(D)
    return c_q * (1 - mu_q) / D


def investment_impact(a: AbsorptionParams, D: float) -> float:
    _positive(D)
    return (1 - a.mu_I) / D


def investment_future_term(k: CapitalParams, D: float) -> float:
    """Discounted public-capital channel of one unit of investment, periods 1..S.

    Closed form of ``sum_s beta^s (zeta + psi ybar_k) phi (1 - delta_g)^(s-1) / D``
    under a constant denominator and output/capital ratio.
    """
    _positive(D)
    q = k.beta * (1 - k.delta_g)
    if q == 1:
        raise ParameterError("beta (1 - delta_g) = 1 makes the geometric ratio degenerate")
    scale = (k.zeta + k.psi * k.ybar_k) * k.phi / D
    return scale * k.beta * (1 - q ** k.S) / (1 - q)


def investment_pv_closed(a: AbsorptionParams, k: CapitalParams, D: float) -> float:
    """Present-value multiplier of investment: impact plus the public-capital channel."""
    return investment_impact(a, D) + investment_future_term(k, D)


def dominance_gap(a: AbsorptionParams, k: CapitalParams, D: float, cost: float = 0.0) -> float:
    """Signed margin by which investment beats current spending in present value.

    Positive values mean the discounted public-capital channel outweighs the
    extra import leakage ``(mu_I - mu_C) / D`` plus the lump cost term.
    """
    _positive(D)
    return investment_future_term(k, D) - (a.mu_I - a.mu_C) / D - cost


def risk_premium(r: RiskParams) -> float:
    return r.rho0 + r.rho1 * r.debt_to_gdp + r.rho2 * r.extdebt_to_exports + r.rho3 * r.sigma


def debt_ratio_derivative(B_next: float, Y_next: float, dB: float, dY: float) -> float:
    """Response of ``B/Y`` next period to an instrument that moves ``B`` by ``dB`` and ``Y`` by ``dY``.

    Negative exactly when ``B_next dY > Y_next dB``.
    """
    if not Y_next > 0:
        raise ParameterError(f"output must be positive, got {Y_next}")
    return (Y_next * dB - B_next * dY) / Y_next ** 2


def potential_output_effect(psi: float, Ystar: float, Kg: float, phi: float,
                            delta_g: float, s: int) -> float:
    """Change in potential output ``s`` periods after one unit of investment."""
    if not Kg > 0:
        raise ParameterError(f"public capital must be positive, got {Kg}")
    if int(s) != s or s < 1:
        raise ParameterError(f"lag s must be an integer >= 1, got {s}")
    return psi * (Ystar / Kg) * phi * (1 - delta_g) ** (s - 1)
