"""Fiscal-composition extension of IS-LM-BP: multipliers, aggregation checks, simulation."""

from .aggregation import (
    CompositionWeights,
    FiscalGradient,
    FiscalVector,
    QuadraticForm,
    aggregate,
    aggregation_bias,
    first_order_effect,
    is_locally_sufficient,
    nullspace_basis,
    second_order_effect,
    weighted_multiplier,
)
from .canonical import (
    CanonicalParams,
    fixed_bp_multiplier,
    flex_multiplier,
    islm_multiplier,
    simple_multiplier,
)
from .errors import (
    ConfigError,
    DimensionError,
    NonFinitePathError,
    NonPositiveDenominatorError,
    ParameterError,
)
from .simulator import (
    INSTRUMENTS,
    SCENARIOS,
    ModelParams,
    Scenario,
    SimulationPath,
    baseline_table,
    finite_difference_impact,
    present_value,
    scalar_g_prediction,
    simulate,
)

__version__ = "0.1.0"
