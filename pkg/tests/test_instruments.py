import math

import pytest
from hypothesis import given, strategies as st

from fiscal_composition import instruments as I
from fiscal_composition.errors import NonPositiveDenominatorError, ParameterError
from fiscal_composition.validation.symbolic import loop_future_term

A = I.AbsorptionParams()
K = I.CapitalParams()
D = 0.77


def test_baseline_denominator():
    assert I.denominator(A) == pytest.approx(0.77, abs=1e-15)
    assert I.denominator(A, debt_term=0.1) == pytest.approx(0.87, abs=1e-15)
    with pytest.raises(ParameterError):
        I.denominator(A, debt_term=-0.1)


def test_impact_multipliers():
    assert I.current_impact(A, D) == pytest.approx(0.78 / 0.77)
    assert I.investment_impact(A, D) == pytest.approx(0.72 / 0.77)
    assert I.transfer_impact(0.9, 0.18, D) == pytest.approx(0.9 * 0.82 / 0.77)
    assert I.transfer_impact(0.45, 0.36, D) == pytest.approx(0.45 * 0.64 / 0.77)


def test_non_positive_denominator():
    with pytest.raises(NonPositiveDenominatorError):
        I.current_impact(A, 0.0)
    with pytest.raises(NonPositiveDenominatorError):
        I.transfer_impact(0.9, 0.1, -0.5)


def test_future_term_matches_loop_oracle():
    # frozen from the explicit loop over s = 1..19
    assert loop_future_term(K, D) == pytest.approx(1.5422192186297574, abs=1e-13)
    assert I.investment_future_term(K, D) == pytest.approx(loop_future_term(K, D), abs=1e-13)
    assert I.investment_pv_closed(A, K, D) == pytest.approx(0.72 / 0.77 + 1.5422192186297574, abs=1e-13)


def test_one_period_horizon():
    k = I.CapitalParams(S=1)
    assert I.investment_future_term(k, D) == pytest.approx(0.96 * 0.2 * 0.75 / 0.77, abs=1e-15)


@given(phi=st.floats(0, 1), psi=st.floats(0, 0.5), delta=st.floats(0, 0.9), zeta=st.floats(0, 0.5),
       beta=st.floats(0.5, 0.99), S=st.integers(1, 80), D=st.floats(0.05, 3.0))
def test_geometric_sum_equals_loop(phi, psi, delta, zeta, beta, S, D):
    k = I.CapitalParams(phi=phi, psi=psi, delta_g=delta, zeta=zeta, beta=beta, S=S)
    assert I.investment_future_term(k, D) == pytest.approx(loop_future_term(k, D), rel=1e-11, abs=1e-13)


def test_dominance_gap_signs():
    gap = I.dominance_gap(A, K, D)
    assert gap == pytest.approx(1.5422192186297574 - 0.06 / 0.77)
    assert gap > 0
    assert I.dominance_gap(A, K, D, cost=2.0) < 0
    assert I.dominance_gap(I.AbsorptionParams(mu_I=0.95), I.CapitalParams(psi=0, zeta=0), D) < 0


def test_risk_premium_linear():
    r = I.RiskParams(rho0=0.01, rho1=0.02, rho2=0.03, rho3=0.04, debt_to_gdp=1, extdebt_to_exports=2, sigma=3)
    assert I.risk_premium(r) == pytest.approx(0.01 + 0.02 + 0.06 + 0.12)
    with pytest.raises(ParameterError):
        I.RiskParams(rho1=-1)
    with pytest.raises(ParameterError):
        I.RiskParams(sigma=math.nan)


def test_debt_ratio_derivative_sign():
    assert I.debt_ratio_derivative(60, 100, 1, 0) == pytest.approx(0.01)
    # falls exactly when B dY > Y dB
    assert I.debt_ratio_derivative(60, 100, 1, 2) < 0
    assert I.debt_ratio_derivative(60, 100, 1.2, 2) == pytest.approx(0.0)
    with pytest.raises(ParameterError):
        I.debt_ratio_derivative(60, 0, 1, 1)


def test_potential_output_effect():
    assert I.potential_output_effect(0.12, 100, 100, 0.75, 0.07, 1) == pytest.approx(0.09)
    assert I.potential_output_effect(0.12, 100, 100, 0.75, 0.07, 3) == pytest.approx(0.09 * 0.93**2)
    with pytest.raises(ParameterError):
        I.potential_output_effect(0.12, 100, 100, 0.75, 0.07, 0)


@pytest.mark.parametrize("kw", [dict(mu_C=1.2), dict(c_p=-0.1), dict(cbar=1.0)])
def test_absorption_validation(kw):
    with pytest.raises(ParameterError):
        I.AbsorptionParams(**kw)


@pytest.mark.parametrize("kw", [dict(beta=1.0), dict(delta_g=1.0), dict(S=0), dict(phi=1.5), dict(psi=-1)])
def test_capital_validation(kw):
    with pytest.raises(ParameterError):
        I.CapitalParams(**kw)
