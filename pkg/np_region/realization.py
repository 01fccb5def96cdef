"""Distribution pairs with a prescribed Neyman-Pearson boundary.

A convex polyline is realized by one item per segment whose likelihood
ratio p/q equals the segment's slope magnitude. A convex curve on the
unit interval is realized against uniform P by the CDF F(x) = B^-1(1 - x).
"""

import logging
import math
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from np_region.base import (
    DegenerateGridError,
    NonConvexInputError,
    NonInvertibleBoundaryError,
    NonMonotoneInputError,
)
from np_region.boundary import eval_boundary, exact_boundary
from np_region.distributions import make_categorical_pair
from np_region.models.boundary import CdfTable, PiecewiseLinearBoundary, midpoint_convex
from np_region.models.distributions import CategoricalPair
from np_region.solvers import bisect_threshold, cross

logger = logging.getLogger(__name__)

Vertex = Tuple[float, float]
BoundaryLike = Union[PiecewiseLinearBoundary, Callable[[float], float]]

# Samples used to check a callable boundary for flat stretches
INVERTIBILITY_SAMPLES = 1025


def realize_categorical(vertices: Sequence[Vertex]) -> CategoricalPair:
    """Categorical pair whose boundary is the polyline (0, 1), v_1, ..., v_n, (1, 0).

    Item i carries q_i = alpha_i - alpha_{i-1} and p_i = beta_{i-1} - beta_i;
    a terminal item (1 - alpha_n, beta_n) is added unless v_n = (1, 0).

    Args:
        vertices: (alpha, beta) pairs after the implied start (0, 1)

    Returns:
        Pair with labels x1, x2, ...

    Raises:
        NonMonotoneInputError: If alpha does not increase, beta does not
            decrease, or a vertex leaves the unit square
        NonConvexInputError: If the polyline (with its extension to (1, 0))
            does not turn strictly counter-clockwise at every vertex

    Examples:
        >>> pair = realize_categorical([(0.1, 0.4), (0.4, 0.1)])
        >>> [round(x, 12) for x in pair.p]
        [0.6, 0.3, 0.1]
        >>> [round(x, 12) for x in pair.q]
        [0.1, 0.3, 0.6]
    """
    points = _check_monotone(vertices)
    chain = [(0.0, 1.0)] + points
    if chain[-1] != (1.0, 0.0):
        chain.append((1.0, 0.0))

    for o, m, n in zip(chain, chain[1:], chain[2:]):
        if cross(o, m, n) <= 0.0:
            raise NonConvexInputError(f"polyline is not strictly convex at vertex {m}")

    alphas = np.array([a for a, _ in chain])
    betas = np.array([b for _, b in chain])
    q = np.diff(alphas)
    p = -np.diff(betas)
    logger.debug("realize_categorical: %d vertices -> %d items", len(points), len(q))
    return make_categorical_pair(p.tolist(), q.tolist())


def _check_monotone(vertices: Sequence[Vertex]) -> list:
    try:
        points = [(float(a), float(b)) for a, b in vertices]
    except (TypeError, ValueError):
        raise NonMonotoneInputError("vertices must be pairs of numbers")
    if not points:
        raise NonMonotoneInputError("at least one vertex is required")

    previous = (0.0, 1.0)
    for i, (a, b) in enumerate(points):
        if not (math.isfinite(a) and math.isfinite(b)) or not (0.0 <= a <= 1.0 and 0.0 <= b <= 1.0):
            raise NonMonotoneInputError(f"vertex {(a, b)} leaves the unit square")
        if b >= previous[1]:
            raise NonMonotoneInputError(f"beta must decrease strictly, got {b} after {previous[1]}")
        # alpha may stay at 0 only for a vertical first segment
        if a < previous[0] or (a == previous[0] and i > 0):
            raise NonMonotoneInputError(f"alpha must increase strictly, got {a} after {previous[0]}")
        previous = (a, b)
    return points


def _as_function(boundary: BoundaryLike) -> Callable[[float], float]:
    if isinstance(boundary, PiecewiseLinearBoundary):
        xs, ys = boundary.alphas, boundary.betas
        return lambda a: float(np.interp(a, xs, ys))
    return lambda a: float(boundary(a))


def _check_invertible(boundary: BoundaryLike, B: Callable[[float], float]) -> None:
    if isinstance(boundary, PiecewiseLinearBoundary):
        betas = boundary.betas
    else:
        betas = np.array([B(a) for a in np.linspace(0.0, 1.0, INVERTIBILITY_SAMPLES).tolist()])
        if not np.isfinite(betas).all() or (betas < 0.0).any() or betas[0] > 1.0:
            raise NonInvertibleBoundaryError("boundary values must lie in [0, 1]")
        if abs(betas[-1]) > 1e-12:
            raise NonInvertibleBoundaryError(f"boundary must vanish at alpha = 1, got {betas[-1]}")
    if (np.diff(betas) >= 0.0).any():
        raise NonInvertibleBoundaryError(
            "boundary must decrease strictly; flat stretches have no unique inverse"
        )


def realize_unit_interval(boundary: BoundaryLike, knots: int = 1001) -> CdfTable:
    """CDF table F(x) = B^-1(1 - x) of Q against uniform P on [0, 1].

    The inverse is found by bisection: F(x) is the smallest alpha with
    B(alpha) <= 1 - x, and 0 where B(0) <= 1 - x.

    Args:
        boundary: Polyline or any callable B on [0, 1]
        knots: Number of equispaced x values

    Raises:
        NonInvertibleBoundaryError: If B has a flat stretch or does not end at 0
        NonConvexInputError: If B is not convex
        DegenerateGridError: If knots < 2

    Examples:
        >>> table = realize_unit_interval(lambda a: (1.0 - a) ** 2, knots=5)
        >>> [round(v, 9) for v in table.values]
        [0.0, 0.133974596, 0.292893219, 0.5, 1.0]
    """
    if knots < 2:
        raise DegenerateGridError(f"knots must be at least 2, got {knots}")
    B = _as_function(boundary)
    _check_invertible(boundary, B)

    xs = np.linspace(0.0, 1.0, knots)
    start = B(0.0)
    values = []
    for x in xs[:-1].tolist():
        level = 1.0 - x
        if start <= level:
            values.append(0.0)
        else:
            values.append(bisect_threshold(lambda a: B(a) <= level, 0.0, 1.0))
    values.append(1.0)

    f = np.maximum.accumulate(np.clip(values, 0.0, 1.0))
    if not midpoint_convex(xs, f):
        raise NonConvexInputError(
            "boundary is not convex; its inverse does not give a convex CDF"
        )
    return CdfTable(knots=tuple(xs.tolist()), values=tuple(f.tolist()))


def cdf_table_to_pair(table: CdfTable) -> CategoricalPair:
    """Discretize a CDF table against uniform P: p_i = dx, q_i = dF per cell.

    The exact boundary of the result passes through every (F(x_i), 1 - x_i)
    when the table is convex.
    """
    p = np.diff(table.x)
    q = np.diff(table.f)
    return make_categorical_pair(p.tolist(), q.tolist())


def verify_realization(pair: CategoricalPair, target: BoundaryLike, samples: int = 101) -> float:
    """Largest deviation between the pair's exact boundary and ``target`` on a grid.

    Examples:
        >>> pair = realize_categorical([(0.1, 0.4), (0.4, 0.1)])
        >>> verify_realization(pair, exact_boundary(pair)) == 0.0
        True
    """
    alphas = np.linspace(0.0, 1.0, samples)
    exact = eval_boundary(exact_boundary(pair), alphas)
    B = _as_function(target)
    wanted = np.array([B(a) for a in alphas.tolist()])
    return float(np.max(np.abs(exact - wanted)))
