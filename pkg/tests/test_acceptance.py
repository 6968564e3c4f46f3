"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are collected and repeated in the terminal summary, so
``pytest tests/test_acceptance.py`` ends with the full scorecard.
"""

import io
import math
import random
import time

import numpy as np
import pytest

from fiscal_composition import aggregation as agg
from fiscal_composition import canonical as can
from fiscal_composition import cli
from fiscal_composition import instruments as I
from fiscal_composition.battery import run_battery
from fiscal_composition.config import RunConfig
from fiscal_composition.simulator import (
    DEFAULT_RHO_DRAG,
    INSTRUMENTS,
    SCENARIOS,
    ModelParams,
    Scenario,
    analytic_impact_derivatives,
    baseline_table,
    calibrate_drag,
    finite_difference_impact,
    scalar_g_prediction,
    simulate,
)
from fiscal_composition.validation import run_deterministic_suite, run_sensitivity_suite, run_symbolic_suite
from fiscal_composition.validation.deterministic import random_restricted_params
from fiscal_composition.validation.montecarlo import (
    STRESS_STREAM,
    MonteCarloConfig,
    run_monte_carlo,
    simulate_draws,
)

SCORECARD = []

IMPACTS = (5.0649, 4.6753, 4.7922, 1.8701, 4.1006)
PVS = (5.0548, 12.3784, 4.7820, 1.8586, 6.0184)


def record(n, ok, detail):
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    SCORECARD.append(line)
    assert ok, line


@pytest.fixture(scope="module")
def det():
    return {r.id: r for r in run_deterministic_suite()}


@pytest.fixture(scope="module")
def mc():
    cfg = MonteCarloConfig()
    start = time.perf_counter()
    summary = run_monte_carlo(cfg, workers=1)
    return summary, time.perf_counter() - start


def test_criterion_01_impact_column():
    p = ModelParams()
    rows = baseline_table(p)
    times = []
    for _ in range(20):
        t0 = time.perf_counter()
        baseline_table(p)
        times.append(time.perf_counter() - t0)
    err = max(abs(r[1] - e) for r, e in zip(rows, IMPACTS))
    runtime = min(times)
    record(1, err <= 5e-5 and runtime < 0.010,
           f"impact column max abs err {err:.1e} (tol 5e-5); runtime {1e3 * runtime:.2f} ms (< 10 ms)")


def test_criterion_02_scalar_g():
    value = scalar_g_prediction(ModelParams())
    blind = {scalar_g_prediction(ModelParams()) for _ in SCENARIOS}
    record(2, abs(value - 6.493506) <= 1e-6 and len(blind) == 1,
           f"scalar-G prediction {value:.8f} vs 6.493506 (tol 1e-6)")


def test_criterion_03_finite_differences():
    p = ModelParams()
    expected = {"current_spending": 1.01298701, "public_investment": 0.93506494, "poor_transfer": 0.95844156}
    an = analytic_impact_derivatives(p)
    errs = []
    for inst in INSTRUMENTS:
        errs.append(abs(finite_difference_impact(p, inst) - an[inst]))
    ref_err = max(abs(an[k] - v) for k, v in expected.items())
    record(3, max(errs) <= 1e-8 and ref_err <= 5e-9,
           f"max |fd - analytic| {max(errs):.1e} (tol 1e-8); analytic vs reference values {ref_err:.1e}")


def _residuals(p, path):
    """Identity residuals recomputed from the stored path."""
    kg = max(abs(path.dKg[t + 1] - (1 - p.delta_g) * path.dKg[t] - p.phi * path.investment[t])
             for t in range(path.T - 1)) if path.T > 1 else 0.0
    debt = max(abs(path.dB[t + 1] - (1 + p.r) * path.dB[t] - path.fiscal_cost[t] + p.tau * path.dY[t])
               for t in range(path.T - 1)) if path.T > 1 else 0.0
    nx = float(np.max(np.abs(path.nx + path.fiscal_imports + p.n_x * path.dY - p.chi * path.dKg)))
    return max(kg, debt, nx)


def test_criterion_04_identities():
    p = ModelParams()
    worst = max(_residuals(p, simulate(p, s)) for s in SCENARIOS)
    cfg = MonteCarloConfig()
    records = simulate_draws(cfg.base, cfg.stress_ranges, cfg.seed, 500, stream=STRESS_STREAM)
    stress_worst = 0.0
    for r in records:
        q = cfg.base.replace(**r.params)
        for s in SCENARIOS:
            path = simulate(q, s)
            assert all(np.all(np.isfinite(c)) for c in path.columns().values())
            stress_worst = max(stress_worst, _residuals(q, path))
    record(4, worst <= 1e-10 and stress_worst <= 1e-10 and len(records) == 500,
           f"max identity residual baseline {worst:.1e}, 500 stress draws {stress_worst:.1e} (tol 1e-10)")


def test_criterion_05_closed_form():
    rng = random.Random(20240517)
    worst = 0.0
    for _ in range(1000):
        p = random_restricted_params(rng).replace(rho_drag=0.0)
        sim_pv = simulate(p, Scenario.pure("public_investment")).pv_y
        closed = p.shock * I.investment_pv_closed(p.absorption(), p.capital(), p.denominator)
        worst = max(worst, abs(sim_pv - closed))
    record(5, worst <= 1e-9, f"1000 draws, max |simulated - closed form| {worst:.1e} (tol 1e-9)")


def test_criterion_06_pv_column():
    # root solve of the drag against the current-spending PV from a drag-free start
    rho = calibrate_drag(ModelParams(rho_drag=0.0), PVS[0], scenario="current_spending")
    results = []
    for label, value in (("oracle", rho), ("default", DEFAULT_RHO_DRAG)):
        rows = baseline_table(ModelParams(rho_drag=value))
        rel = max(abs(r[2] - e) / e for r, e in zip(rows, PVS))
        pv = {r[0]: r[2] for r in rows}
        order = ["public_investment", "mixed_policy", "current_spending", "poor_transfer", "rich_transfer"]
        ordered = all(pv[a] > pv[b] for a, b in zip(order, order[1:]))
        results.append((label, value, rel, ordered))
    ok = all(rel <= 0.01 and ordered for _, _, rel, ordered in results)
    record(6, ok, "; ".join(f"{label} rho_drag {value:.6e}: PV max rel err {rel:.1e} (tol 1e-2), ordering {ordered}"
                            for label, value, rel, ordered in results))


def test_criterion_07_aggregation():
    sym = run_symbolic_suite(n_points=1000)
    sym_ok = all(r.passed for r in sym[:4])
    # homogeneous gradient: every simplex point gives the same weighted multiplier, and only then
    rng = random.Random(1)
    ok_iff = True
    for _ in range(1000):
        n = rng.randint(2, 5)
        lam = rng.uniform(-3, 3)
        w = np.array([rng.random() for _ in range(n)])
        w = w / w.sum()
        hom = agg.weighted_multiplier([lam] * n, w)
        grad = [lam] * n
        grad[rng.randrange(n)] += rng.uniform(0.1, 2)
        vertices = [agg.weighted_multiplier(grad, np.eye(n)[j]) for j in range(n)]
        ok_iff &= abs(hom - lam) <= 1e-12 and max(vertices) - min(vertices) > 1e-3
    det10 = run_deterministic_suite(n_closed_form_draws=1)[9]
    record(7, sym_ok and ok_iff and det10.passed,
           f"SYM-01..04 on 1000 exact rational instances {sym_ok}; simplex invariance iff homogeneous {ok_iff}; "
           f"DET-10 {det10.details}")


def test_criterion_08_monotonicity(det):
    sens = run_sensitivity_suite(grid_size=51)
    p = ModelParams()
    cur = Scenario.pure("current_spending")
    grids = {
        "d0": (np.linspace(0.15, 1.5, 50), "pv_y"),
        "m": (np.linspace(0.02, 0.8, 50), "impact"),
        "omega_f": (np.linspace(0.0, 0.9, 50), "impact"),
        "omega_rho": (np.linspace(0.0, 0.8, 50), "impact"),
    }
    channel_ok = True
    for name, (xs, attr) in grids.items():
        ys = np.array([getattr(simulate(p.replace(**{name: float(x)}), cur), attr) for x in xs])
        channel_ok &= bool(np.all(np.diff(ys) <= 1e-12))
    det_ok = all(det[f"DET-{i}"].passed for i in (11, 12, 13, 14))
    record(8, all(r.passed for r in sens) and channel_ok and det_ok,
           f"SENS-01..04 on 51-point grids; DET-11..14 channels non-increasing on 50-point grids {channel_ok}")


def test_criterion_09_monte_carlo(mc):
    s, runtime = mc
    c = s.winner_counts
    checks = {
        "share=1": s.share_composition_dependent == 1.0,
        "inv share": 0.60 <= s.investment_win_share <= 0.90,
        "poor impact": 0.10 <= s.poor_impact_win_share <= 0.40,
        "MAE": 1.0 <= s.mean_abs_scalar_g_error <= 4.0,
        "pure winners": all(c[k] > 0 for k in INSTRUMENTS),
        "mixed": c["mixed_policy"] <= 0.01 * s.n_draws,
        "phi/psi": s.mean_phi_if_investment_wins > s.mean_phi_otherwise
        and s.mean_psi_if_investment_wins > s.mean_psi_otherwise,
        "mu_I": s.mean_mu_I_if_investment_wins < s.mean_mu_I_otherwise,
        "runtime": runtime < 30,
    }
    failed = [k for k, v in checks.items() if not v]
    record(9, not failed,
           f"share {s.share_composition_dependent:.4f}; investment {s.investment_win_share:.4f}; "
           f"poor impact {s.poor_impact_win_share:.4f}; MAE {s.mean_abs_scalar_g_error:.4f}; "
           f"winners {list(c.values())}; {runtime:.1f} s" + (f"; failed {failed}" if failed else ""))


def test_criterion_10_reproducibility(mc):
    cfg = MonteCarloConfig()
    again = run_monte_carlo(cfg, workers=1)
    parallel = run_monte_carlo(cfg, workers=4)
    a = run_battery(RunConfig()).archive
    b = run_battery(RunConfig()).archive
    det20 = run_deterministic_suite(n_closed_form_draws=1)[19]
    ok = again == mc[0] and parallel == mc[0] and a == b and det20.passed
    record(10, ok, f"MC summary rerun equal {again == mc[0]}; 4 workers equal {parallel == mc[0]}; "
                   f"bundles byte-identical {a == b} ({len(a)} bytes); {det20.details}")


def test_criterion_11_canonical():
    rng = random.Random(11)
    le_ok = True
    for _ in range(1000):
        p = can.CanonicalParams(c=rng.uniform(0.05, 0.95), t=rng.uniform(0, 0.5), m=rng.uniform(0, 0.5),
                                b=rng.uniform(0.01, 5), k=rng.uniform(0.01, 5), h=rng.uniform(0.01, 5),
                                eta=1.0, kappa=rng.uniform(0.01, 5), m_B=rng.uniform(0, 0.5))
        le_ok &= can.islm_multiplier(p) <= can.simple_multiplier(p)
    base = dict(c=0.8, t=0.2, m=0.1, b=0.5, k=0.25, h=0.5, eta=1.0, m_B=0.1)
    big = can.CanonicalParams(kappa=1e12, **base)
    limit_err = abs(can.fixed_bp_multiplier(big) - can.simple_multiplier(big)) / can.simple_multiplier(big)
    flex = [can.flex_multiplier(can.CanonicalParams(kappa=k, **base)) for k in np.linspace(0.01, 100, 100)]
    decreasing = bool(np.all(np.diff(flex) < 0))
    h = 1e-3
    slope = (can.flex_denominator(can.CanonicalParams(kappa=2 + h, **base))
             - can.flex_denominator(can.CanonicalParams(kappa=2 - h, **base))) / (2 * h)
    slope_err = abs(slope - base["k"] / base["h"])
    sym05 = run_symbolic_suite(n_points=200)[4]
    ok = le_ok and limit_err < 1e-6 and decreasing and slope_err <= 1e-8 and sym05.passed
    record(11, ok, f"islm<=simple {le_ok}; fixed-BP rel err at kappa=1e12 {limit_err:.1e}; "
                   f"flex strictly decreasing {decreasing}; slope err {slope_err:.1e}")


def test_criterion_12_validate_command():
    out = io.StringIO()
    t0 = time.perf_counter()
    code = cli.main(["validate"], stdout=out)
    runtime = time.perf_counter() - t0
    total = out.getvalue().splitlines()[-1].split()
    record(12, code == 0 and total == ["Total", "42", "42"] and runtime < 60,
           f"validate exit {code}; {' '.join(total)}; {runtime:.1f} s (< 60 s)")
