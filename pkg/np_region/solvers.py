"""Scalar bisection and planar hull helpers shared by the bound modules."""

import logging
from typing import Callable, Iterable, List, Tuple

from scipy import optimize

from np_region.base import BISECT_MAX_ITER, BISECT_WIDTH

logger = logging.getLogger(__name__)

Point = Tuple[float, float]


def bisect_threshold(
    predicate: Callable[[float], bool],
    lower: float,
    upper: float,
    width: float = BISECT_WIDTH,
    max_iter: int = BISECT_MAX_ITER,
) -> float:
    """Locate the smallest x in [lower, upper] where a monotone predicate holds.

    The predicate must be false-then-true on the interval and true at
    ``upper``. The bracket is halved by ``scipy.optimize.bisect`` on the
    predicate's sign; the result is the smallest evaluated point where the
    predicate held, so it always satisfies the predicate and lies within
    ``width`` of the true threshold.

    Args:
        predicate: Monotone test, false below the threshold and true above
        lower: Left end of the bracket
        upper: Right end of the bracket (predicate holds here)
        width: Absolute bracket width at which to stop
        max_iter: Maximum number of halvings

    Returns:
        Right end of the final bracket

    Examples:
        >>> round(bisect_threshold(lambda x: x * x >= 2.0, 0.0, 2.0), 9)
        1.414213562
    """
    if predicate(lower):
        return lower
    # narrow or infeasible brackets return their upper end
    if upper - lower <= width or not predicate(upper):
        return upper

    feasible = [upper]

    def sign(x: float) -> float:
        if predicate(x):
            feasible.append(x)
            return 1.0
        return -1.0

    _, result = optimize.bisect(
        sign, lower, upper, xtol=width, maxiter=max_iter, full_output=True, disp=False,
    )
    threshold = min(feasible)
    if not result.converged:
        logger.warning(
            "bisection stopped after %d iterations near %.12g",
            result.iterations, threshold,
        )

    return threshold


def cross(o: Point, a: Point, b: Point) -> float:
    """Z-component of (a - o) x (b - o); positive for a counter-clockwise turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Iterable[Point]) -> List[Point]:
    """Lower convex hull of planar points, left to right (monotone chain).

    Collinear points are dropped. Among points sharing the smallest or the
    largest abscissa only the lowest one is kept.

    Args:
        points: Any iterable of (x, y) pairs

    Returns:
        Hull vertices sorted by x
    """
    hull: List[Point] = []
    for point in sorted(set((float(x), float(y)) for x, y in points)):
        while len(hull) >= 2 and cross(hull[-2], hull[-1], point) <= 0.0:
            hull.pop()
        hull.append(point)

    # Higher points at the largest abscissa survive the sweep
    while len(hull) >= 2 and hull[-1][0] == hull[-2][0]:
        hull.pop()

    return hull
