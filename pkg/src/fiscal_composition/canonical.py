"""Closed-form fiscal multipliers of the linear IS, IS-LM and IS-LM-BP closures.

All multipliers are derivatives of equilibrium output with respect to a scalar
fiscal aggregate ``G``:

=================  ====================================  ==============================
closure            held fixed                            multiplier
=================  ====================================  ==============================
goods market       interest rate, exchange rate          ``1 / alpha``
IS-LM              real money, exchange rate             ``1 / (alpha + b k / h)``
fixed-rate BP      exchange rate, BP equilibrium         ``1 / (alpha + b m_B / kappa)``
flexible-rate BP   real money, BP equilibrium            ``1 / (alpha - m_B + (k/h)(b + kappa))``
=================  ====================================  ==============================

with ``alpha = 1 - c (1 - t) + m``.  ``h`` and ``kappa`` accept ``math.inf`` so the
flat-LM and perfect-mobility limits can be evaluated directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPositiveDenominatorError, ParameterError


@dataclass(frozen=True)
class CanonicalParams:
    """Slope coefficients of the linear IS / LM / BP system.

    Autonomous terms (``C0``, ``T0``, ``I0``, ``X0``) are omitted because no
    multiplier depends on them.
    """

    c: float  # marginal propensity to consume
    t: float  # proportional tax rate
    m: float  # import propensity in IS
    b: float  # interest sensitivity of demand
    k: float  # income coefficient of money demand
    h: float  # interest coefficient of money demand
    eta: float  # exchange-rate elasticity of net exports
    kappa: float  # capital mobility
    m_B: float  # import propensity in BP

    def __post_init__(self):
        checks = [
            (0 < self.c < 1, "c must lie in (0, 1)"),
            (0 <= self.t < 1, "t must lie in [0, 1)"),
            (self.m >= 0, "m must be non-negative"),
            (self.b > 0, "b must be positive"),
            (self.k > 0, "k must be positive"),
            (self.h > 0, "h must be positive"),
            (self.eta > 0, "eta must be positive"),
            (self.kappa > 0, "kappa must be positive"),
            (self.m_B >= 0, "m_B must be non-negative"),
        ]
        for ok, msg in checks:
            if not ok:
                raise ParameterError(f"{msg} (got {self})")
        if not self.alpha > 0:
            raise NonPositiveDenominatorError(f"alpha = {self.alpha} must be positive")

    @property
    def alpha(self) -> float:
        return 1 - self.c * (1 - self.t) + self.m


def simple_multiplier(p: CanonicalParams) -> float:
    """Goods-market multiplier at fixed interest and exchange rates."""
    return 1 / p.alpha


def islm_multiplier(p: CanonicalParams) -> float:
    return 1 / (p.alpha + p.b * p.k / p.h)


def fixed_bp_multiplier(p: CanonicalParams) -> float:
    return 1 / (p.alpha + p.b * p.m_B / p.kappa)


def flex_denominator(p: CanonicalParams) -> float:
    """Denominator of the flexible-rate multiplier; affine in ``kappa`` with slope ``k/h``."""
    if math.isinf(p.kappa):
        return math.inf
    return p.alpha - p.m_B + (p.k / p.h) * (p.b + p.kappa)


def flex_multiplier(p: CanonicalParams) -> float:
    """Flexible-exchange-rate multiplier.

    Raises :class:`NonPositiveDenominatorError` when ``m_B`` is large enough to
    make the denominator non-positive.
    """
    den = flex_denominator(p)
    if not den > 0:
        raise NonPositiveDenominatorError(
            f"flexible-rate denominator {den} is not positive; configuration inadmissible"
        )
    return 1 / den
