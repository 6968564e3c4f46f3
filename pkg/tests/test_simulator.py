import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fiscal_composition import simulator as sim
from fiscal_composition.errors import ParameterError
from fiscal_composition.simulator import SCENARIOS, ModelParams, Scenario, simulate
from fiscal_composition.validation.deterministic import identity_residuals

IMPACTS = [5.0649, 4.6753, 4.7922, 1.8701, 4.1006]
PVS = [5.0548, 12.3784, 4.7820, 1.8586, 6.0184]


def test_impact_column(baseline):
    rows = sim.baseline_table(baseline)
    assert [r[0] for r in rows] == list(sim.SCENARIO_NAMES)
    for (_, impact, _), expected in zip(rows, IMPACTS):
        assert impact == pytest.approx(expected, abs=5e-5)


def test_pv_column(baseline):
    for (_, _, pv), expected in zip(sim.baseline_table(baseline), PVS):
        assert pv == pytest.approx(expected, abs=5e-5)


def test_investment_pv_ten_decimals(baseline):
    assert f"{simulate(baseline, Scenario.pure('public_investment')).pv_y:.10f}" == "12.3783792471"


def test_calibration_recovers_default_drag(baseline):
    target = 12.3783792471
    rho = sim.calibrate_drag(baseline.replace(rho_drag=0.0), target, scenario="public_investment")
    assert rho == pytest.approx(sim.DEFAULT_RHO_DRAG, rel=1e-8)


def test_current_spending_oracle_close_to_default(baseline):
    rho = sim.calibrate_drag(baseline.replace(rho_drag=0.0), 5.0548)
    assert rho == pytest.approx(sim.DEFAULT_RHO_DRAG, rel=2e-3)
    assert simulate(baseline.replace(rho_drag=rho), SCENARIOS[0]).pv_y == pytest.approx(5.0548, abs=1e-10)


def test_calibration_unknown_scenario(baseline):
    with pytest.raises(ParameterError):
        sim.calibrate_drag(baseline, 5.0, scenario="nope")


def test_scalar_g_prediction(baseline):
    assert sim.scalar_g_prediction(baseline) == pytest.approx(6.493506, abs=1e-6)


@pytest.mark.parametrize("inst", sim.INSTRUMENTS)
def test_finite_difference_matches_analytic(baseline, inst):
    an = sim.analytic_impact_derivatives(baseline)[inst]
    assert sim.finite_difference_impact(baseline, inst) == pytest.approx(an, abs=1e-8)


def test_finite_difference_guards(baseline):
    with pytest.raises(ParameterError):
        sim.finite_difference_impact(baseline, "helicopter")
    with pytest.raises(ParameterError):
        sim.finite_difference_impact(baseline, "current_spending", eps=1e-12)


def test_scenario_weights():
    with pytest.raises(ParameterError):
        Scenario("bad", (0.5, 0.6, 0.0, 0.0))
    with pytest.raises(ParameterError):
        Scenario.pure("unknown")
    assert SCENARIOS[-1].weights == (0.25, 0.25, 0.25, 0.25)


def test_identities_all_scenarios(baseline):
    for s in SCENARIOS:
        assert max(identity_residuals(baseline, simulate(baseline, s))) <= 1e-10


def test_identities_explicit(baseline):
    p = baseline
    path = simulate(p, Scenario.pure("public_investment"))
    for t in range(p.T - 1):
        assert path.dKg[t + 1] == pytest.approx((1 - p.delta_g) * path.dKg[t] + p.phi * path.investment[t], abs=1e-12)
        assert path.dB[t + 1] == pytest.approx((1 + p.r) * path.dB[t] + path.fiscal_cost[t] - p.tau * path.dY[t],
                                               abs=1e-12)
    assert np.allclose(path.nx, -path.fiscal_imports - p.n_x * path.dY + p.chi * path.dKg, atol=1e-12)
    assert path.dKg[0] == 0 and path.dB[0] == 0


def test_pv_matches_explicit_discounting(baseline):
    path = simulate(baseline, SCENARIOS[0])
    assert path.pv_y == pytest.approx(sum(baseline.beta**t * y for t, y in enumerate(path.dY)), rel=1e-14)


def test_deterministic_bitwise(baseline):
    a = simulate(baseline, SCENARIOS[1])
    b = simulate(baseline, SCENARIOS[1])
    for x, y in zip(a.columns().values(), b.columns().values()):
        assert np.array_equal(x, y)


def test_linear_in_shock_without_drag(baseline):
    p = baseline.replace(rho_drag=0.0)
    small = simulate(p.replace(shock=2.0), SCENARIOS[0])
    big = simulate(p.replace(shock=4.0), SCENARIOS[0])
    assert big.impact == pytest.approx(2 * small.impact, abs=1e-12)
    assert np.allclose(big.dY, 2 * small.dY, rtol=0, atol=1e-12)


def test_single_period_horizon(baseline):
    p = baseline.replace(T=1, rho_drag=0.0)
    for s in SCENARIOS:
        path = simulate(p, s)
        assert path.pv_y == path.impact


def test_shock_period_offset(baseline):
    path = simulate(baseline, Scenario("late", (1, 0, 0, 0), shock_period=3))
    assert np.all(path.dY[:3] == 0)
    assert path.impact == pytest.approx(5 * 0.78 / 0.77)


def test_debt_term_enlarges_denominator(baseline):
    assert baseline.denominator == pytest.approx(0.77)
    assert baseline.replace(d0=1.5).denominator == pytest.approx(0.77 + 0.9)
    assert baseline.replace(d0=0.2).denominator == pytest.approx(0.77)


@pytest.mark.parametrize("kw", [dict(cbar=1.2), dict(mu_C=-0.1), dict(T=0), dict(shock=0.0),
                                dict(beta=1.0), dict(rho_drag=-1e-4), dict(psi=float("nan"))])
def test_invalid_params(kw):
    with pytest.raises(ParameterError):
        ModelParams(**kw)


def test_range_check(baseline):
    baseline.validate(check_ranges=True)
    with pytest.raises(ParameterError):
        baseline.replace(psi=0.3).validate(check_ranges=True)


def test_params_from_mapping():
    p = sim.params_from_mapping({"phi": 0.5, "T": 10.0})
    assert p.phi == 0.5 and p.T == 10 and isinstance(p.T, int)
    with pytest.raises(ParameterError):
        sim.params_from_mapping({"gamma": 1.0})


def test_path_csv_format(baseline):
    text = sim.path_to_csv(simulate(baseline, SCENARIOS[0]))
    lines = text.split("\n")
    assert lines[0] == "t,dY,dYstar,dKg,dB,nx,pi"
    assert len(lines) == baseline.T + 2 and lines[-1] == ""
    assert lines[1].startswith("0,5.0649350649,")


@given(w=st.lists(st.floats(0, 1), min_size=4, max_size=4).filter(lambda w: sum(w) > 0.01),
       shock=st.floats(0.1, 20))
@settings(max_examples=200)
def test_impact_is_weighted_sum_of_pure_impacts(w, shock):
    p = ModelParams(shock=shock)
    w = np.array(w) / sum(w)
    pure = np.array([simulate(p, Scenario.pure(i)).impact for i in sim.INSTRUMENTS])
    mixed = simulate(p, Scenario("mix", tuple(w))).impact
    assert mixed == pytest.approx(float(w @ pure), rel=1e-12, abs=1e-12)
