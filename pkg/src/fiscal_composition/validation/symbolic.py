"""Identity checks of the aggregation theorem, evaluated exactly at random rational points.

Each check states an algebraic identity and confirms it with ``Fraction``
arithmetic, so agreement is equality rather than closeness.  The two checks
that involve floating-point formulas (the flexible-rate denominator slope and
the geometric public-capital sum) use explicit tolerances.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .. import aggregation as agg
from .. import canonical, instruments
from .report import TestResult

MAX_DENOM = 10**6


def _rat(rng: random.Random, lo: int = -10, hi: int = 10) -> Fraction:
    """Random rational with numerator and denominator bounded by 10^6."""
    den = rng.randint(1, MAX_DENOM)
    num = rng.randint(lo * den, hi * den)
    return Fraction(num, den)


def _cubic(rng):
    return [_rat(rng, -3, 3) for _ in range(4)]


def _f(coef, G):
    return coef[0] + coef[1] * G + coef[2] * G**2 + coef[3] * G**3


def _fprime(coef, G):
    return coef[1] + 2 * coef[2] * G + 3 * coef[3] * G**2


def _equal_aggregate_pair(rng, n):
    ga = [_rat(rng) for _ in range(n)]
    v = [_rat(rng) for _ in range(n - 1)]
    gb = list(ga)
    for j, vj in enumerate(v, start=1):  # move along the kernel basis
        gb[0] -= vj
        gb[j] += vj
    return ga, gb


def check_linear_sufficiency(rng, n_points):
    """Zero-sum directions are invisible iff the linear map has equal coefficients."""
    basis = agg.nullspace_basis(3)
    for i in range(n_points):
        if i % 2 == 0:
            a = _rat(rng)
            grad = (a, a, a)
        else:
            grad = tuple(_rat(rng) for _ in range(3))
        invisible = all(agg.first_order_effect(grad, v) == 0 for v in basis)
        homogeneous = grad[0] == grad[1] == grad[2]
        if invisible != homogeneous:
            return False
        if agg.is_locally_sufficient(grad, tol=1e-15) != homogeneous:
            return False
    return True


def check_zero_sum_visibility(rng, n_points):
    v1, v2 = agg.nullspace_basis(3)
    for _ in range(n_points):
        aC, aI, aT = (_rat(rng) for _ in range(3))
        grad = (aC, aI, aT)
        if agg.aggregate(v1) != 0 or agg.aggregate(v2) != 0:
            return False
        if agg.first_order_effect(grad, v1) != -aC + aI:
            return False
        if agg.first_order_effect(grad, v2) != -aC + aT:
            return False
        if (aC != aI) and agg.first_order_effect(grad, v1) == 0:
            return False
    return True


def check_function_of_aggregate(rng, n_points):
    """For F = f(1'g) with cubic f: zero first-order effect and constancy on level sets."""
    for _ in range(n_points):
        n = rng.randint(2, 6)
        coef = _cubic(rng)
        g = [_rat(rng) for _ in range(n)]
        lam = _fprime(coef, agg.aggregate(g))
        grad = [lam] * n
        if any(agg.first_order_effect(grad, v) != 0 for v in agg.nullspace_basis(n)):
            return False
        ga, gb = _equal_aggregate_pair(rng, n)
        if agg.aggregate(ga) != agg.aggregate(gb):
            return False
        if _f(coef, agg.aggregate(ga)) != _f(coef, agg.aggregate(gb)):
            return False
    return True


def _composition_F(coef, gamma, g):
    return _f(coef, sum(g)) + gamma * (g[0] - g[1]) ** 2


def check_nonlinear_counterexample(rng, n_points):
    """F = f(1'g) + gamma (G_C - G_I)^2 breaks aggregation whenever gamma != 0."""
    for _ in range(n_points):
        coef = _cubic(rng)
        gamma = _rat(rng, 1, 5)
        ga = [_rat(rng) for _ in range(3)]
        if ga[0] == ga[1]:
            ga[1] += 1
        # equal aggregate, composition term switched off
        gb = [ga[0], ga[0], ga[2] + ga[1] - ga[0]]
        if sum(ga) != sum(gb):
            return False
        if _composition_F(coef, gamma, ga) == _composition_F(coef, gamma, gb):
            return False
        # at G_C = G_I the gradient is homogeneous, yet the second-order term is not zero
        G = sum(gb)
        fp, fpp = _fprime(coef, G), 2 * coef[2] + 6 * coef[3] * G
        grad = (fp, fp, fp)
        H = [[fpp + 2 * gamma, fpp - 2 * gamma, fpp],
             [fpp - 2 * gamma, fpp + 2 * gamma, fpp],
             [fpp, fpp, fpp]]
        v = (-1, 1, 0)
        eps = _rat(rng, -1, 1)
        exact = _composition_F(coef, gamma, [x + eps * d for x, d in zip(gb, v)]) \
            - _composition_F(coef, gamma, gb)
        if agg.second_order_effect(grad, H, v, eps) != exact:
            return False
        if eps != 0 and exact == 0:
            return False
    return True


def check_flex_denominator_slope(rng, n_points, rel_tol=1e-8):
    """Central difference of the flexible denominator in kappa equals k/h."""
    for _ in range(n_points):
        c, t = rng.uniform(0.3, 0.9), rng.uniform(0, 0.4)
        m = rng.uniform(0, 0.4)
        p = canonical.CanonicalParams(
            c=c, t=t, m=m, b=rng.uniform(0.1, 2), k=rng.uniform(0.1, 2), h=rng.uniform(0.1, 2),
            eta=1.0, kappa=rng.uniform(0.1, 10), m_B=m,
        )
        step = 1e-3 * p.kappa
        lo = canonical.flex_denominator(_replace(p, kappa=p.kappa - step))
        hi = canonical.flex_denominator(_replace(p, kappa=p.kappa + step))
        slope = (hi - lo) / (2 * step)
        if abs(slope - p.k / p.h) > rel_tol * (p.k / p.h):
            return False
    return True


def _replace(p, **kw):
    fields = dict(vars(p))
    fields.update(kw)
    return canonical.CanonicalParams(**fields)


def loop_future_term(k: instruments.CapitalParams, D: float) -> float:
    """Brute-force sum of the discounted public-capital channel, term by term."""
    total = 0.0
    for s in range(1, k.S + 1):
        total += k.beta**s * (k.zeta + k.psi * k.ybar_k) * k.phi * (1 - k.delta_g) ** (s - 1) / D
    return total


def random_capital_params(rng: random.Random) -> instruments.CapitalParams:
    return instruments.CapitalParams(
        phi=rng.uniform(0, 1), psi=rng.uniform(0, 0.3), delta_g=rng.uniform(0, 0.3),
        zeta=rng.uniform(0, 0.3), beta=rng.uniform(0.85, 0.995), ybar_k=rng.uniform(0.5, 2),
        S=rng.randint(1, 60),
    )


def check_geometric_pv(rng, n_points, tol=1e-12):
    for _ in range(n_points):
        k = random_capital_params(rng)
        a = instruments.AbsorptionParams(mu_I=rng.uniform(0, 1))
        D = rng.uniform(0.2, 2.0)
        closed = instruments.investment_pv_closed(a, k, D)
        brute = (1 - a.mu_I) / D + loop_future_term(k, D)
        if not math.isclose(closed, brute, rel_tol=tol, abs_tol=tol):
            return False
    return True


def run_symbolic_suite(seed: int = 20240517, n_points: int = 1000) -> list[TestResult]:
    """SYM-01..06."""
    rng = random.Random(seed)
    return [
        TestResult("SYM-01", "Linear aggregation sufficiency",
                   check_linear_sufficiency(rng, n_points),
                   "Requires a_C=a_I=a_T."),
        TestResult("SYM-02", "Zero-sum recompositions can affect output",
                   check_zero_sum_visibility(rng, n_points),
                   "Composition changes are invisible to scalar G."),
        TestResult("SYM-03", "If F=f(sum G), zero-sum changes have zero first-order effect",
                   check_function_of_aggregate(rng, n_points),
                   "Aggregation case verified."),
        TestResult("SYM-04", "Nonlinear composition term violates aggregation",
                   check_nonlinear_counterexample(rng, n_points),
                   "Counterexample verified."),
        TestResult("SYM-05", "Flexible denominator rises with capital mobility",
                   check_flex_denominator_slope(rng, n_points),
                   "dD/dkappa=k/h."),
        TestResult("SYM-06", "Public-capital PV equals finite geometric expression",
                   check_geometric_pv(rng, n_points),
                   "Geometric PV verified."),
    ]
