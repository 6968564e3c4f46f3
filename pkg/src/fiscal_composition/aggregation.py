"""Aggregation of a fiscal instrument vector into a scalar ``G = 1'g``.

The functions here work with plain Python numbers so that ``fractions.Fraction``
inputs stay exact; the identity checks of the validation battery rely on that.
Every operation accepts either the light container types defined below or
ordinary sequences of numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Sequence, Union

from .errors import DimensionError, ParameterError

WEIGHT_SUM_TOL = 1e-12
SYMMETRY_TOL = 1e-12


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"g{i + 1}" for i in range(n))


def _check_labels(labels, n):
    if len(labels) != n:
        raise DimensionError(f"{len(labels)} labels for {n} entries")
    if len(set(labels)) != n:
        raise ParameterError(f"labels must be unique: {labels}")


@dataclass(frozen=True)
class FiscalVector:
    """Instrument levels ``g`` in spending units, with one label per instrument."""

    values: tuple
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) < 1:
            raise DimensionError("a fiscal vector needs at least one instrument")
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(len(self.values)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        _check_labels(self.labels, len(self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class FiscalGradient:
    """Marginal output effects ``dF/dg_j``, aligned with a :class:`FiscalVector`."""

    values: tuple
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(len(self.values)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        _check_labels(self.labels, len(self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class CompositionWeights:
    """Shares of a marginal fiscal impulse; must sum to one."""

    values: tuple
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(len(self.values)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        _check_labels(self.labels, len(self.values))
        _check_weight_sum(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric matrix of second derivatives of output in the instruments."""

    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.matrix)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionError("Hessian must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if abs(rows[i][j] - rows[j][i]) > SYMMETRY_TOL:
                    raise ParameterError(
                        f"Hessian is not symmetric at ({i}, {j}): {rows[i][j]} vs {rows[j][i]}"
                    )
        object.__setattr__(self, "matrix", rows)

    def __len__(self):
        return len(self.matrix)

    def quad(self, v) -> Real:
        """Return ``v' H v``."""
        v = _values(v)
        if len(v) != len(self.matrix):
            raise DimensionError(f"vector of length {len(v)} against {len(self.matrix)}x{len(self.matrix)} form")
        return sum(v[i] * row[j] * v[j] for i, row in enumerate(self.matrix) for j in range(len(v)))


VectorLike = Union[FiscalVector, FiscalGradient, CompositionWeights, Sequence[Real]]


def _values(x) -> tuple:
    if isinstance(x, (FiscalVector, FiscalGradient, CompositionWeights)):
        return x.values
    return tuple(x)


def _check_weight_sum(values):
    total = sum(values)
    if isinstance(total, Fraction) or isinstance(total, int):
        ok = total == 1
    else:
        ok = abs(total - 1) <= WEIGHT_SUM_TOL
    if not ok:
        raise ParameterError(f"composition weights must sum to 1, got {total}")


def _dot(a, b) -> Real:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def aggregate(g: VectorLike) -> Real:
    """Scalar aggregate ``G = 1'g``."""
    return sum(_values(g))


def nullspace_basis(n: int) -> list[FiscalVector]:
    """Basis ``{-e_1 + e_j : j = 2..n}`` of the kernel of the aggregation map."""
    if n < 2:
        raise DimensionError(f"the aggregation kernel is trivial for n={n}; need n >= 2")
    basis = []
    for j in range(1, n):
        v = [0] * n
        v[0] = -1
        v[j] = 1
        basis.append(FiscalVector(tuple(v)))
    return basis


def first_order_effect(grad: VectorLike, dg: VectorLike) -> Real:
    """First-order output change ``grad' dg``."""
    return _dot(_values(grad), _values(dg))


def is_locally_sufficient(grad: VectorLike, tol: float = 1e-9) -> bool:
    """True when every instrument has the same marginal effect (``grad = lambda 1``).

    Components are compared to their mean with a relative tolerance floored at 1,
    so the test behaves sensibly for gradients near zero.
    """
    vals = _values(grad)
    if not vals:
        raise DimensionError("empty gradient")
    if not tol > 0:
        raise ParameterError("tol must be positive")
    mean = sum(vals) / len(vals)
    spread = max(abs(v - mean) for v in vals)
    return spread <= tol * max(1, abs(mean))


def weighted_multiplier(grad: VectorLike, w: VectorLike) -> Real:
    """Scalar multiplier ``grad' w`` generated by an impulse with composition ``w``."""
    wv = _values(w)
    if not isinstance(w, CompositionWeights):
        _check_weight_sum(wv)
    return _dot(_values(grad), wv)


def aggregation_bias(grad: VectorLike, w: VectorLike, lambda_bar: Real, dG: Real) -> Real:
    """First-order error ``(grad' w - lambda_bar) dG`` of a scalar-G model.

    Pass ``lambda_bar = weighted_multiplier(grad, w_bar)`` to get the error of
    transferring a multiplier measured under composition ``w_bar``.
    """
    return (_dot(_values(grad), _values(w)) - lambda_bar) * dG


def composition_transfer_bias(grad: VectorLike, w: VectorLike, w_bar: VectorLike, dG: Real) -> Real:
    return aggregation_bias(grad, w, weighted_multiplier(grad, w_bar), dG)


def second_order_effect(grad: VectorLike, H, v: VectorLike, eps: Real) -> Real:
    """Second-order expansion ``grad' v eps + eps^2 v' H v / 2`` along direction ``v``."""
    if not isinstance(H, QuadraticForm):
        H = QuadraticForm(H)
    vv = _values(v)
    if len(H) != len(vv):
        raise DimensionError(f"Hessian is {len(H)}x{len(H)} but direction has length {len(vv)}")
    half = Fraction(1, 2) if isinstance(eps, (Fraction, int)) else 0.5
    return _dot(_values(grad), vv) * eps + half * eps * eps * H.quad(vv)
