"""The 42-check validation battery: symbolic, deterministic, sensitivity, Monte Carlo."""

from .deterministic import run_deterministic_suite
from .montecarlo import (
    MonteCarloConfig,
    MonteCarloSummary,
    run_mc_suite,
    run_monte_carlo,
    run_stress,
)
from .report import CATALOG, TestReport, TestResult, emit_report
from .sensitivity import run_sensitivity_suite
from .symbolic import run_symbolic_suite

__all__ = [
    "CATALOG",
    "MonteCarloConfig",
    "MonteCarloSummary",
    "TestReport",
    "TestResult",
    "emit_report",
    "run_deterministic_suite",
    "run_mc_suite",
    "run_monte_carlo",
    "run_sensitivity_suite",
    "run_stress",
    "run_symbolic_suite",
]
