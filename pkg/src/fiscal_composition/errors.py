"""Exception types raised by the fiscal-composition engine."""


class ParameterError(ValueError):
    """A parameter lies outside its admissible domain."""


class NonPositiveDenominatorError(ParameterError):
    """A multiplier denominator is zero or negative (inadmissible configuration)."""


class DimensionError(ValueError):
    """Vectors or matrices that must be aligned have incompatible shapes."""


class NonFinitePathError(ArithmeticError):
    """A simulated path contains NaN or infinite entries."""


class ConfigError(ValueError):
    """A configuration file could not be parsed or validated."""
