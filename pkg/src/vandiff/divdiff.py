"""Divided differences at distinct points, by two independent routes.

The recursive table is the default route; the explicit sum

    sum_i f(y_i) / prod_{j != i} (y_i - y_j)

is kept as an algebraically independent oracle.  Both are exact when the
points are rational and f is a rational polynomial, floating otherwise.
`divided_difference_side` builds the product side of the main identity:
the pairwise-difference product of x times the divided difference at the
transformed points.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .funcs import AnalyticFunction, Polynomial
from .points import PointSequence, y_from_x
from .symfun import vandermonde_product

# min gap below this fraction of the span triggers a conditioning warning
CLUSTER_RATIO = 1e-6


class ConditioningWarning(UserWarning):
    """Clustered points: expect precision loss in floating results."""


@dataclass(frozen=True)
class DividedDifferenceTable:
    """Triangular table: layer k holds the order-k divided differences."""

    points: tuple
    layers: tuple[tuple, ...]

    @property
    def value(self):
        """The top entry: the full-order divided difference."""
        return self.layers[-1][0]


def _check_distinct(values: Sequence) -> None:
    if len(set(values)) != len(values):
        raise ValueError("divided differences require distinct points")


def _warn_if_clustered(values: Sequence) -> None:
    span = max(values) - min(values)
    ordered = sorted(values)
    min_gap = min(b - a for a, b in zip(ordered, ordered[1:]))
    if min_gap < CLUSTER_RATIO * span:
        warnings.warn(
            f"minimum point gap {min_gap} is below {CLUSTER_RATIO} of the span {span}",
            ConditioningWarning,
            stacklevel=3,
        )


def build_table(values: Sequence, fvalues: Sequence) -> DividedDifferenceTable:
    """The recursive table over arbitrary distinct points (any order)."""
    _check_distinct(values)
    if len(values) != len(fvalues):
        raise ValueError("points and values must have equal length")
    _warn_if_clustered(values)
    layers = [tuple(fvalues)]
    m = len(values)
    for k in range(1, m):
        prev = layers[-1]
        layers.append(
            tuple((prev[j + 1] - prev[j]) / (values[j + k] - values[j]) for j in range(m - k))
        )
    return DividedDifferenceTable(tuple(values), tuple(layers))


def sum_form(values: Sequence, f: AnalyticFunction):
    """The reciprocal-product sum over arbitrary distinct points."""
    _check_distinct(values)
    _warn_if_clustered(values)
    total = None
    for i, yi in enumerate(values):
        denom = None
        for j, yj in enumerate(values):
            if j == i:
                continue
            d = yi - yj
            denom = d if denom is None else denom * d
        term = f(yi) if denom is None else f(yi) / denom
        total = term if total is None else total + term
    return total


def _table_values(points: PointSequence, f: AnalyticFunction) -> tuple:
    # exact only when both the points and f keep Fraction arithmetic closed
    if points.is_exact and isinstance(f, Polynomial):
        return points.values
    return points.as_floats()


def divided_difference(points: PointSequence, f: AnalyticFunction):
    """Divided difference of f at the points, via the recursive table."""
    values = _table_values(points, f)
    return build_table(values, tuple(f(v) for v in values)).value


def divided_difference_sum_form(points: PointSequence, f: AnalyticFunction):
    """Divided difference via the explicit reciprocal-product sum."""
    return sum_form(_table_values(points, f), f)


def divided_difference_side(x: PointSequence, f: AnalyticFunction):
    """Product side of the main identity: V(x) times the divided
    difference of f at the sum-complement points y."""
    values = _table_values(x, f)
    vx = vandermonde_product(values)
    seq = x if isinstance(values[0], Fraction) else PointSequence(values)
    return vx * divided_difference(y_from_x(seq), f)
