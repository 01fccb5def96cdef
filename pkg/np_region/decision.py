"""Bayes error rates, convex conjugates and ROC conversions of a boundary.

A prior (pi_p, pi_q) defines the cost pi_p * alpha + pi_q * beta of a
test. Its minimum over the region is the Bayes error rate, attained where
a line of slope -pi_p/pi_q supports the boundary.
"""

import logging
import math
from typing import List, Tuple

import numpy as np

from np_region.base import (
    ABS_TOL,
    DegenerateGridError,
    NonNegativeSlopeError,
    TargetOutsideRegionError,
)
from np_region.boundary import eval_boundary
from np_region.models.boundary import PiecewiseLinearBoundary
from np_region.models.bounds import BoundCurve
from np_region.models.decision import MixingPlan, PriorPair
from np_region.models.distributions import CategoricalPair

logger = logging.getLogger(__name__)

Point = Tuple[float, float]


def bayes_error(b: PiecewiseLinearBoundary, prior: PriorPair) -> Tuple[float, Point]:
    """Smallest pi_p * alpha + pi_q * beta over the boundary vertices.

    Ties within 1e-12 go to the vertex with the smaller alpha.

    Returns:
        (BER, minimizing vertex)

    Examples:
        >>> from np_region.boundary import IGNORANCE
        >>> bayes_error(IGNORANCE, PriorPair(pi_p=0.3))
        (0.3, (1.0, 0.0))
    """
    best_cost, best_vertex = math.inf, b.vertices[0]
    for alpha, beta in b.vertices:
        cost = prior.pi_p * alpha + prior.pi_q * beta
        if cost < best_cost - ABS_TOL:
            best_cost, best_vertex = cost, (alpha, beta)
    return best_cost, best_vertex


def bayes_error_pair(pair: CategoricalPair, prior: PriorPair) -> float:
    """Bayes error of a pair computed item by item, sum of min(pi_p q_i, pi_q p_i)."""
    terms = np.minimum(prior.pi_p * pair.q_array, prior.pi_q * pair.p_array)
    return math.fsum(terms.tolist())


def ber_bounds(
    lower: BoundCurve,
    upper: BoundCurve,
    prior: PriorPair,
    grid: int = 2001,
) -> Tuple[float, float]:
    """Interval for the Bayes error from a lower and an upper boundary curve.

    Both ends minimize the prior-weighted cost over ``grid`` equispaced alphas.

    Raises:
        DegenerateGridError: If grid < 2
    """
    if grid < 2:
        raise DegenerateGridError(f"grid needs at least 2 points, got {grid}")
    alphas, low = lower.sample(grid)
    _, high = upper.sample(grid)
    lb = float(np.min(prior.pi_p * alphas + prior.pi_q * low))
    ub = float(np.min(prior.pi_p * alphas + prior.pi_q * high))
    if lb > ub + ABS_TOL:
        logger.warning("ber_bounds: lower end %.12g exceeds upper end %.12g", lb, ub)
    return lb, ub


def conjugate(b: PiecewiseLinearBoundary, z: float) -> Tuple[float, float, float]:
    """Convex conjugate B*(z) = max(z*alpha - beta) and the Bayes error it encodes.

    The slope z < 0 corresponds to the prior pi_p = z / (z - 1), and
    BER = B*(z) / (z - 1).

    Returns:
        (B*(z), pi_p, BER)

    Raises:
        NonNegativeSlopeError: If z >= 0

    Examples:
        >>> from np_region.boundary import IGNORANCE
        >>> conjugate(IGNORANCE, -1.0)
        (-1.0, 0.5, 0.5)
    """
    if not z < 0.0:
        raise NonNegativeSlopeError(f"conjugate needs a negative slope, got {z}")
    bstar = float(np.max(z * b.alphas - b.betas))
    return bstar, z / (z - 1.0), bstar / (z - 1.0)


def roc_points(b: PiecewiseLinearBoundary) -> List[Point]:
    """Boundary vertices as ROC points (fpr, tpr) = (alpha, 1 - beta)."""
    return [(alpha, 1.0 - beta) for alpha, beta in b.vertices]


def rates_to_target(fpr: float, tpr: float) -> Point:
    """ROC coordinates to an (alpha, beta) operating point.

    Raises:
        TargetOutsideRegionError: If a rate is outside [0, 1]
    """
    if not (0.0 <= fpr <= 1.0 and 0.0 <= tpr <= 1.0):
        raise TargetOutsideRegionError(f"rates must lie in [0, 1], got fpr={fpr}, tpr={tpr}")
    return fpr, 1.0 - tpr


def roc_mixing_weight(b: PiecewiseLinearBoundary, t: float, g: float) -> MixingPlan:
    """Randomize the boundary test at alpha = t with a coin flip to reach (t, g).

    The weight solves g = lambda * B(t) + (1 - lambda) * (1 - t).

    Raises:
        TargetOutsideRegionError: If t is not in (0, 1] or g lies outside [B(t), 1 - t]

    Examples:
        >>> from np_region.boundary import IGNORANCE
        >>> roc_mixing_weight(IGNORANCE, 0.5, 0.5).weight
        1.0
    """
    if not 0.0 < t <= 1.0:
        raise TargetOutsideRegionError(f"t must lie in (0, 1], got {t}")
    bt = eval_boundary(b, t)
    chance = 1.0 - t
    if not bt - ABS_TOL <= g <= chance + ABS_TOL:
        raise TargetOutsideRegionError(
            f"target beta={g} is outside [{bt:.12g}, {chance:.12g}] at alpha={t}"
        )

    if chance - bt <= ABS_TOL:
        weight = 1.0
    else:
        weight = min(max((chance - g) / (chance - bt), 0.0), 1.0)
    return MixingPlan(t=t, weight=weight, boundary_point=(t, bt), ignorance_point=(t, chance))
