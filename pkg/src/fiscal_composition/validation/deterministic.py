"""Deterministic adversarial cases and accounting identities (DET-01..21)."""

from __future__ import annotations

import random

import numpy as np

from .. import aggregation as agg
from .. import canonical
from ..instruments import investment_pv_closed
from ..simulator import (
    INSTRUMENTS,
    SCENARIOS,
    PARAMETER_RANGES,
    ModelParams,
    SimulationPath,
    analytic_impact_derivatives,
    finite_difference_impact,
    run_scenarios,
    scalar_g_prediction,
    simulate,
)
from .report import TestResult

IDENTITY_TOL = 1e-10
FD_TOL = 1e-8

# Adversarial reconfigurations of the baseline.
POOR_DOMINATES = dict(mu_C=0.70, c_p=0.98, mu_p=0.02)
INVESTMENT_FAILS = dict(mu_I=0.95, psi=0.0, zeta=0.0)
INVESTMENT_FAVORABLE = dict(phi=0.90, psi=0.22, mu_I=0.10, delta_g=0.03)
HOMOGENEOUS = dict(mu_C=0.30, mu_I=0.30, c_p=1.0, mu_p=0.30, c_r=1.0, mu_r=0.30)
DET15_PARAMS = dict(c=0.6, t=0.2, m=0.22, b=0.5, k=0.5, h=1.0, eta=1.0, m_B=0.22)

INVESTMENT = SCENARIOS[1]
CURRENT = SCENARIOS[0]


def _fmt_pvs(paths: dict[str, SimulationPath]) -> str:
    return ", ".join(f"{k}={v.pv_y:.4f}" for k, v in paths.items())


def debt_identity_residual(p: ModelParams, path: SimulationPath) -> float:
    lhs = path.dB[1:]
    rhs = (1 + p.r) * path.dB[:-1] + path.fiscal_cost[:-1] - p.tau * path.dY[:-1]
    return float(np.max(np.abs(lhs - rhs), initial=abs(path.dB[0])))


def capital_identity_residual(p: ModelParams, path: SimulationPath) -> float:
    lhs = path.dKg[1:]
    rhs = (1 - p.delta_g) * path.dKg[:-1] + p.phi * path.investment[:-1]
    return float(np.max(np.abs(lhs - rhs), initial=abs(path.dKg[0])))


def nx_identity_residual(p: ModelParams, path: SimulationPath) -> float:
    rhs = -path.fiscal_imports - p.n_x * path.dY + p.chi * path.dKg
    return float(np.max(np.abs(path.nx - rhs)))


def identity_residuals(p: ModelParams, path: SimulationPath) -> tuple[float, float, float]:
    """Largest per-period violation of the debt, capital and external-balance laws."""
    return (debt_identity_residual(p, path), capital_identity_residual(p, path),
            nx_identity_residual(p, path))


def closed_form_gap(p: ModelParams) -> tuple[float, float]:
    """Simulated investment PV and ``shock * investment_pv_closed`` with the drag off."""
    q = p.replace(rho_drag=0.0)
    sim = simulate(q, INVESTMENT).pv_y
    closed = q.shock * investment_pv_closed(q.absorption(), q.capital(), q.denominator)
    return sim, closed


def random_restricted_params(rng: random.Random) -> ModelParams:
    """Random admissible parameters with no debt-fragility term (constant D)."""
    values = {name: rng.uniform(lo, hi) for name, (lo, hi) in PARAMETER_RANGES.items()}
    values["d0"] = min(values["d0"], 0.60)
    return ModelParams(**values, T=rng.randint(2, 40), shock=rng.uniform(0.5, 10.0))


def run_deterministic_suite(p: ModelParams | None = None, seed: int = 20240517,
                            n_closed_form_draws: int = 1000) -> list[TestResult]:
    p = ModelParams() if p is None else p
    out = []
    base = run_scenarios(p)
    pvs = [path.pv_y for path in base.values()]

    # DET-01
    distinct = len({round(v, 10) for v in pvs}) == len(pvs)
    out.append(TestResult("DET-01", "Same aggregate G gives different PV(Y)", distinct, _fmt_pvs(base)))

    # DET-02
    common = scalar_g_prediction(p)
    blind = [scalar_g_prediction(p) for _ in SCENARIOS]
    impacts = [path.impact for path in base.values()]
    ok = len(set(blind)) == 1 and max(impacts) - min(impacts) > 1e-9
    out.append(TestResult("DET-02", "Scalar-G model gives identical prediction", ok, f"common={common:.6f}"))

    # DET-03
    an = analytic_impact_derivatives(p)
    parts, ok = [], True
    for inst in INSTRUMENTS:
        fd = finite_difference_impact(p, inst)
        ok &= abs(fd - an[inst]) <= FD_TOL
        parts.append(f"{inst}: fd={fd:.8f}, an={an[inst]:.8f}")
    out.append(TestResult("DET-03", "Finite-difference derivatives match analytic derivatives", ok, "; ".join(parts)))

    # DET-04..06
    res = np.array([identity_residuals(p, path) for path in base.values()])
    out.append(TestResult("DET-04", "Debt identity holds", res[:, 0].max() <= IDENTITY_TOL,
                          f"All baseline periods checked; max residual={res[:, 0].max():.2e}"))
    out.append(TestResult("DET-05", "Public-capital identity holds", res[:, 1].max() <= IDENTITY_TOL,
                          f"All investment periods checked; max residual={res[:, 1].max():.2e}"))
    out.append(TestResult("DET-06", "External-balance decomposition holds", res[:, 2].max() <= IDENTITY_TOL,
                          f"NX identity checked; max residual={res[:, 2].max():.2e}"))

    # DET-07
    adv = run_scenarios(p.replace(**POOR_DOMINATES))
    poor, cur = adv["poor_transfer"].impact, adv["current_spending"].impact
    out.append(TestResult("DET-07", "Poor transfers can dominate current spending in impact", poor > cur,
                          f"poor={poor:.4f}; current={cur:.4f}"))

    # DET-08
    adv = run_scenarios(p.replace(**INVESTMENT_FAILS))
    best = max(adv, key=lambda k: adv[k].pv_y)
    inv = adv["public_investment"].pv_y
    ok = best != "public_investment" and inv == min(v.pv_y for v in adv.values())
    out.append(TestResult("DET-08", "Public investment does not universally dominate", ok,
                          f"best={best}; investment PV={inv:.4f}"))

    # DET-09
    fav = run_scenarios(p.replace(**INVESTMENT_FAVORABLE))
    best = max(fav, key=lambda k: fav[k].pv_y)
    out.append(TestResult("DET-09", "Public investment dominates under favorable conditions",
                          best == "public_investment", _fmt_pvs(fav)))

    # DET-10
    hom = p.replace(**HOMOGENEOUS)
    grad = [finite_difference_impact(hom, inst) for inst in INSTRUMENTS]
    hom_paths = run_scenarios(hom, SCENARIOS[:4])
    imp = [path.impact for path in hom_paths.values()]
    rng = np.random.default_rng(seed)
    w_draws = rng.dirichlet(np.ones(4), size=200)
    mults = [agg.weighted_multiplier(grad, w / w.sum()) for w in w_draws]
    ok = (agg.is_locally_sufficient(grad, tol=1e-8) and max(imp) - min(imp) <= 1e-12
          and max(mults) - min(mults) <= 1e-8)
    out.append(TestResult("DET-10", "Aggregation passes when marginal effects are homogeneous", ok,
                          ", ".join(f"{v:.8f}" for v in imp)))

    # DET-11..14: low vs high stress on one denominator channel
    lo = simulate(p.replace(d0=0.30), CURRENT).pv_y
    hi = simulate(p.replace(d0=1.50), CURRENT).pv_y
    out.append(TestResult("DET-11", "Higher fiscal fragility lowers net fiscal effect", hi < lo,
                          f"low debt PV={lo:.4f}; high debt PV={hi:.4f}"))
    lo = simulate(p.replace(m=0.05), CURRENT).impact
    hi = simulate(p.replace(m=0.80), CURRENT).impact
    out.append(TestResult("DET-12", "Higher openness lowers impact multiplier", hi < lo,
                          f"low open={lo:.4f}; high open={hi:.4f}"))
    lo = simulate(p.replace(omega_f=0.0), CURRENT).impact
    hi = simulate(p.replace(omega_f=0.90), CURRENT).impact
    out.append(TestResult("DET-13", "Financial penalty lowers impact", hi < lo,
                          f"low penalty={lo:.4f}; high penalty={hi:.4f}"))
    lo = simulate(p.replace(omega_rho=0.0), CURRENT).impact
    hi = simulate(p.replace(omega_rho=0.80), CURRENT).impact
    out.append(TestResult("DET-14", "Risk penalty lowers impact", hi < lo,
                          f"low risk={lo:.4f}; high risk={hi:.4f}"))

    # DET-15
    kappas = np.linspace(0.05, 20.0, 100)
    flex = [canonical.flex_multiplier(canonical.CanonicalParams(kappa=k, **DET15_PARAMS)) for k in kappas]
    ok = bool(np.all(np.diff(flex) < 0))
    out.append(TestResult("DET-15", "Flexible-rate multiplier falls with capital mobility", ok,
                          f"M_low={flex[0]:.4f}; M_high={flex[-1]:.4f}"))

    # DET-16
    q = p.replace(rho_drag=0.0)
    small = simulate(q.replace(shock=2.0), CURRENT)
    big = simulate(q.replace(shock=4.0), CURRENT)
    ok = abs(big.impact - 2 * small.impact) <= 1e-10 and np.allclose(big.dY, 2 * small.dY, rtol=0, atol=1e-10)
    out.append(TestResult("DET-16", "Shock-size linearity holds in linearized case", ok,
                          f"small={small.impact:.6f}; big={big.impact:.6f}"))

    # DET-17
    favp = p.replace(**INVESTMENT_FAVORABLE)
    h5 = simulate(favp.replace(T=5), INVESTMENT).pv_y
    h20 = simulate(favp.replace(T=20), INVESTMENT).pv_y
    out.append(TestResult("DET-17", "Productive investment gains with longer horizon", h20 > h5,
                          f"H5={h5:.4f}; H20={h20:.4f}"))

    # DET-18
    b_lo = simulate(favp.replace(beta=0.90), INVESTMENT).pv_y
    b_hi = simulate(favp.replace(beta=0.985), INVESTMENT).pv_y
    out.append(TestResult("DET-18", "Higher beta raises PV of future-oriented investment", b_hi > b_lo,
                          f"beta low={b_lo:.4f}; beta high={b_hi:.4f}"))

    # DET-19
    sim, closed = closed_form_gap(p)
    ok = abs(sim - closed) <= 1e-9
    crng = random.Random(seed)
    worst = 0.0
    for _ in range(n_closed_form_draws):
        s, c = closed_form_gap(random_restricted_params(crng))
        worst = max(worst, abs(s - c))
    ok = ok and worst <= 1e-9
    out.append(TestResult("DET-19", "Restricted closed-form difference matches simulation", ok,
                          f"closed={closed:.8f}; sim={sim:.8f}; max gap over {n_closed_form_draws} draws={worst:.1e}"))

    # DET-20
    a = simulate(p, INVESTMENT)
    b = simulate(p, INVESTMENT)
    ok = a.pv_y == b.pv_y and all(np.array_equal(x, y) for x, y in zip(a.columns().values(), b.columns().values()))
    out.append(TestResult("DET-20", "Deterministic reproducibility", ok, f"A={a.pv_y:.10f}; B={b.pv_y:.10f}"))

    # DET-21
    ok = all(np.all(np.isfinite(col)) for path in base.values() for col in path.columns().values())
    out.append(TestResult("DET-21", "Baseline trajectories are finite", ok, "All arrays checked."))
    return out
