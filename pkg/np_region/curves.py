"""BoundCurve factories and their pointwise evaluation.

A BoundCurve only records how it was built; this module turns that record
back into numbers. Lower curves are clamped to [0, 1 - alpha].
"""

import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from np_region.base import DegenerateGridError, DomainError, KindMismatchError
from np_region.boundary import IGNORANCE
from np_region.lower_bounds import (
    NAMED_KINDS,
    generic_lower_closed,
    named_lower,
    reversed_lower,
)
from np_region.models.boundary import PiecewiseLinearBoundary
from np_region.models.bounds import BoundCurve, Orientation
from np_region.models.divergences import FGenerator
from np_region.upper_bounds import envelope_values, refined_chernoff, refined_values

logger = logging.getLogger(__name__)

UPPER_KINDS = ('chernoff', 'refined_chernoff')


def lower_curve(
    kind: str,
    value: Union[float, Sequence[float]],
    n: int = 1,
    q: Optional[float] = None,
) -> BoundCurve:
    """Curve of :func:`named_lower` for a fixed kind and divergence value.

    Parameters are checked once here by evaluating at alpha = 1/2.

    Examples:
        >>> curve = lower_curve('hellinger', 0.8)
        >>> round(float(curve(0.16)), 6)
        0.243258
    """
    named_lower(kind, value, n, 0.5, q=q)
    params = {}
    bounds: Optional[Tuple[float, float]] = None
    if kind == 'indicator':
        lower, upper = value
        bounds = (float(lower), float(upper))
    else:
        params['value'] = float(value)
    if q is not None:
        params['q'] = float(q)
    return BoundCurve(kind=kind, orientation='lower', params=params, n=n, bounds=bounds)


def generic_curve(gen: FGenerator, D: float) -> BoundCurve:
    """Curve of the divergence inequality for an arbitrary generator."""
    generic_lower_closed(gen, D, 0.5)
    return BoundCurve(kind='generic', orientation='lower', params={'value': float(D)}, generator=gen)


def reversed_curve(gen: FGenerator, D_reverse: float) -> BoundCurve:
    """Curve of the reversed-divergence inequality, D_reverse = D_f(Q||P)."""
    reversed_lower(gen, D_reverse, 0.5)
    return BoundCurve(
        kind='reversed', orientation='lower', params={'value': float(D_reverse)}, generator=gen
    )


def upper_curve(kind: str, q: float, rho: float, n: int = 1) -> BoundCurve:
    """Raw Chernoff envelope (``chernoff``) or its refinement (``refined_chernoff``)."""
    if kind not in UPPER_KINDS:
        raise KindMismatchError(f"Unknown upper-bound kind {kind!r}")
    refined_chernoff(q, rho, n, 0.5)
    return BoundCurve(kind=kind, orientation='upper', params={'q': float(q), 'rho': float(rho)}, n=n)


def polyline_curve(boundary: PiecewiseLinearBoundary, orientation: Orientation = 'upper') -> BoundCurve:
    """Piecewise-linear curve through the vertices of ``boundary``."""
    return BoundCurve(kind='polyline', orientation=orientation, vertices=boundary.vertices)


def ignorance_curve(orientation: Orientation = 'upper') -> BoundCurve:
    """The line of ignorance beta = 1 - alpha."""
    return BoundCurve(kind='ignorance', orientation=orientation, vertices=IGNORANCE.vertices)


def evaluate_curve(curve: BoundCurve, alpha):
    """Evaluate ``curve`` at a scalar or an array of alphas in [0, 1].

    Raises:
        DomainError: If any alpha lies outside [0, 1]
    """
    alphas = np.asarray(alpha, dtype=float)
    if not ((alphas >= 0.0) & (alphas <= 1.0)).all():
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")

    values = _evaluate(curve, alphas)
    return float(values) if values.ndim == 0 else values


def _evaluate(curve: BoundCurve, alphas: np.ndarray) -> np.ndarray:
    kind = curve.kind
    if curve.vertices is not None:
        xs = [v[0] for v in curve.vertices]
        ys = [v[1] for v in curve.vertices]
        return np.interp(alphas, xs, ys)
    if kind == 'chernoff':
        return envelope_values(curve.params['q'], curve.params['rho'] ** curve.n, alphas)
    if kind == 'refined_chernoff':
        return refined_values(curve.params['q'], curve.params['rho'] ** curve.n, alphas)

    if kind == 'generic':
        def point(a: float) -> float:
            return generic_lower_closed(curve.generator, curve.params['value'], a)
    elif kind == 'reversed':
        def point(a: float) -> float:
            return reversed_lower(curve.generator, curve.params['value'], a)
    elif kind in NAMED_KINDS:
        value = curve.bounds if kind == 'indicator' else curve.params['value']
        q = curve.params.get('q')

        def point(a: float) -> float:
            return named_lower(kind, value, curve.n, a, q=q)
    else:
        raise KindMismatchError(f"Cannot evaluate curve kind {kind!r}")

    flat = np.array([point(a) for a in alphas.ravel().tolist()], dtype=float)
    if curve.orientation == 'lower':
        flat = np.clip(flat, 0.0, 1.0 - alphas.ravel())
    return flat.reshape(alphas.shape)


def sample_curve(curve: BoundCurve, grid: int) -> Tuple[np.ndarray, np.ndarray]:
    """Alphas ``linspace(0, 1, grid)`` and the curve values there.

    Raises:
        DegenerateGridError: If grid < 2
    """
    if grid < 2:
        raise DegenerateGridError(f"grid needs at least 2 points, got {grid}")
    alphas = np.linspace(0.0, 1.0, grid)
    return alphas, np.asarray(evaluate_curve(curve, alphas), dtype=float)
