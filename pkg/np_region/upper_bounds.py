"""Upper bounds on the Neyman-Pearson boundary from Chernoff coefficients.

For every s in (0, 2) some test reaches the tangent line
(2 - s) alpha + s beta = s^q (2 - s)^(1-q) rho_q. The envelope of these
lines is a power curve; replacing its ends by the tangents through (0, 1)
and (1, 0) gives the refined bound. n i.i.d. observations enter through
rho_q**n.
"""

import logging
import math
from typing import Tuple

import numpy as np

from np_region.base import (
    DegenerateGridError,
    DegenerateTargetError,
    DomainError,
    ParamOutOfRangeError,
)
from np_region.models.boundary import PiecewiseLinearBoundary
from np_region.models.bounds import BoundCurve, Line
from np_region.solvers import lower_hull

logger = logging.getLogger(__name__)

# Default sampling grid of convex_refine
HULL_GRID = 4097

# Doubling search for achievability stops here
MAX_SAMPLE_SIZE = 2 ** 40


def _check_q(q: float) -> None:
    if not 0.0 < q < 1.0:
        raise ParamOutOfRangeError(f"q must lie in (0, 1), got {q}")


def _check_rho(rho: float) -> None:
    if not 0.0 < rho <= 1.0:
        raise ParamOutOfRangeError(f"rho must lie in (0, 1], got {rho}")


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ParamOutOfRangeError(f"n must be a positive integer, got {n!r}")


def chernoff_tangent_line(s: float, q: float, rho: float) -> Line:
    """Tangent line (2-s) alpha + s beta = s^q (2-s)^(1-q) rho.

    Examples:
        >>> str(chernoff_tangent_line(1.0, 0.5, 0.8))
        '1*alpha + 1*beta = 0.8 (upper)'
    """
    if not 0.0 < s < 2.0:
        raise ParamOutOfRangeError(f"s must lie in (0, 2), got {s}")
    _check_q(q)
    _check_rho(rho)
    c = s ** q * (2.0 - s) ** (1.0 - q) * rho
    return Line(a=2.0 - s, b=s, c=c, orientation='upper')


def chernoff_tangent_point(s: float, q: float, rho: float) -> Tuple[float, float]:
    """Point where :func:`chernoff_tangent_line` touches the envelope."""
    if not 0.0 < s < 2.0:
        raise ParamOutOfRangeError(f"s must lie in (0, 2), got {s}")
    _check_q(q)
    _check_rho(rho)
    alpha = s ** q * (2.0 - s) ** (-q) * rho * (1.0 - q)
    beta = s ** (q - 1.0) * (2.0 - s) ** (1.0 - q) * rho * q
    return alpha, beta


def _envelope_constant(q: float, r: float) -> float:
    return (q ** q * (1.0 - q) ** (1.0 - q) * r) ** (1.0 / q)


def envelope_values(q: float, r: float, alphas: np.ndarray) -> np.ndarray:
    """Vectorized envelope with effective coefficient r; +inf at alpha = 0."""
    alphas = np.asarray(alphas, dtype=float)
    with np.errstate(divide='ignore'):
        return _envelope_constant(q, r) * np.power(alphas, (q - 1.0) / q)


def refined_values(q: float, r: float, alphas: np.ndarray) -> np.ndarray:
    """Vectorized refined bound with effective coefficient r = rho**n."""
    alphas = np.asarray(alphas, dtype=float)
    if r == 0.0:
        return np.where(alphas == 0.0, 1.0, 0.0)
    left = (1.0 - q) * r ** (1.0 / (1.0 - q))
    right = 1.0 - q
    with np.errstate(divide='ignore', over='ignore', invalid='ignore'):
        middle = envelope_values(q, r, np.maximum(alphas, left))
        first = 1.0 - r ** (-1.0 / (1.0 - q)) * alphas
        values = np.where(
            alphas <= left,
            first,
            np.where(alphas >= right, r ** (1.0 / q) * (1.0 - alphas), middle),
        )
    return np.where(alphas == 0.0, 1.0, values)


def chernoff_envelope(q: float, rho: float, n: int, alpha: float) -> float:
    """Envelope of the tangent family, (q^q (1-q)^(1-q) rho^n)^(1/q) alpha^((q-1)/q).

    Examples:
        >>> round(chernoff_envelope(0.5, 0.8, 1, 0.4), 12)
        0.4

    Raises:
        ParamOutOfRangeError: If q, rho or n is out of range
        DomainError: If alpha is not in (0, 1]
    """
    _check_q(q)
    _check_rho(rho)
    _check_n(n)
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    return float(envelope_values(q, rho ** n, alpha))


def refined_chernoff(q: float, rho: float, n: int, alpha: float) -> float:
    """Envelope with its ends replaced by the tangents through (0, 1) and (1, 0).

    With r = rho**n the pieces are 1 - r^(-1/(1-q)) alpha up to
    alpha = (1-q) r^(1/(1-q)), the envelope up to alpha = 1 - q, and
    r^(1/q) (1 - alpha) afterwards. The result is convex and never above
    the line of ignorance.

    Examples:
        >>> round(refined_chernoff(0.5, 0.8, 1, 0.1), 12)
        0.84375
        >>> round(refined_chernoff(0.5, 0.8, 1, 0.9), 12)
        0.064

    Raises:
        ParamOutOfRangeError: If q, rho or n is out of range
        DomainError: If alpha is not in [0, 1]
    """
    _check_q(q)
    _check_rho(rho)
    _check_n(n)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    return float(refined_values(q, rho ** n, alpha))


def convex_refine(curve: BoundCurve, grid: int = HULL_GRID) -> PiecewiseLinearBoundary:
    """Lower convex envelope of min(curve, 1 - alpha) together with (0, 1) and (1, 0).

    Args:
        curve: Upper bound curve evaluable on [0, 1]
        grid: Number of equispaced alpha samples

    Returns:
        Convex, nonincreasing polyline from alpha = 0 to (1, 0)

    Raises:
        DegenerateGridError: If grid < 2
    """
    if grid < 2:
        raise DegenerateGridError(f"hull grid needs at least 2 points, got {grid}")

    alphas = np.linspace(0.0, 1.0, grid)
    values = np.minimum(np.asarray(curve(alphas), dtype=float), 1.0 - alphas)
    keep = ~np.isnan(values)
    points = list(zip(alphas[keep].tolist(), values[keep].tolist()))
    points.extend([(0.0, 1.0), (1.0, 0.0)])

    hull = lower_hull(points)
    hull[-1] = (1.0, 0.0)
    logger.debug("convex_refine: %d samples, %d hull vertices", grid, len(hull))
    return PiecewiseLinearBoundary(vertices=tuple(hull))


def _check_target(alpha: float, beta: float) -> None:
    if not (0.0 < alpha < 1.0 and 0.0 < beta < 1.0):
        raise DomainError(f"target ({alpha}, {beta}) must lie in the open unit square")
    if alpha + beta >= 1.0:
        raise DomainError(f"target ({alpha}, {beta}) is not below the line of ignorance")


def min_sample_size(q: float, rho: float, alpha: float, beta: float) -> int:
    """Fewest i.i.d. samples the Chernoff lower bound allows for reaching (alpha, beta).

    The tensorized bound excludes (alpha, beta) while
    (1-beta)^q alpha^(1-q) + beta^q (1-alpha)^(1-q) < rho**n, so
    n_min = ceil(ln(lhs) / ln(rho)).

    Examples:
        >>> min_sample_size(0.5, 0.99, 0.05, 0.05)
        83

    Raises:
        ParamOutOfRangeError: If q is not in (0, 1)
        DegenerateTargetError: If rho is not in [0, 1)
        DomainError: If the target is not strictly below the line of ignorance
    """
    _check_q(q)
    if not 0.0 <= rho < 1.0:
        raise DegenerateTargetError(f"rho must lie in [0, 1) for a finite sample size, got {rho}")
    _check_target(alpha, beta)
    if rho == 0.0:
        return 1

    lhs = (1.0 - beta) ** q * alpha ** (1.0 - q) + beta ** q * (1.0 - alpha) ** (1.0 - q)
    return max(1, math.ceil(math.log(lhs) / math.log(rho)))


def achievability_sample_size(q: float, rho: float, alpha: float, beta: float) -> int:
    """Smallest n with refined_chernoff(q, rho, n, alpha) <= beta.

    Doubles n until the refined bound reaches beta, then bisects.

    Raises:
        ParamOutOfRangeError: If q is not in (0, 1)
        DegenerateTargetError: If rho is not in (0, 1) or no n up to 2**40 suffices
        DomainError: If the target is not strictly below the line of ignorance
    """
    _check_q(q)
    if not 0.0 < rho < 1.0:
        raise DegenerateTargetError(f"rho must lie in (0, 1) for a finite sample size, got {rho}")
    _check_target(alpha, beta)

    def reached(n: int) -> bool:
        return float(refined_values(q, rho ** n, alpha)) <= beta

    high = 1
    while not reached(high):
        high *= 2
        if high > MAX_SAMPLE_SIZE:
            raise DegenerateTargetError(f"no sample size up to {MAX_SAMPLE_SIZE} reaches the target")
    low = high // 2
    while high - low > 1:
        mid = (low + high) // 2
        if reached(mid):
            high = mid
        else:
            low = mid
    return high
