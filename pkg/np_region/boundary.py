"""Exact Neyman-Pearson boundaries of categorical pairs and their queries.

The boundary B(alpha) is the smallest type-II error beta = 1 - P(E)
achievable at type-I error alpha = Q(E). Likelihood-ratio tests trace it
out: adding items in order of decreasing p/q walks the vertices, and
randomizing between neighbouring tests fills the segments.
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

import numpy as np

from np_region.base import (
    ABS_TOL,
    MAX_BRUTE_FORCE_SUPPORT,
    BlowupLimitError,
    DomainError,
    PairFormatError,
)
from np_region.distributions import lr_profile
from np_region.models.boundary import PiecewiseLinearBoundary
from np_region.models.distributions import CategoricalPair
from np_region.solvers import lower_hull

logger = logging.getLogger(__name__)

Vertex = Tuple[float, float]

IGNORANCE = PiecewiseLinearBoundary(vertices=((0.0, 1.0), (1.0, 0.0)))


def exact_boundary(pair: CategoricalPair) -> PiecewiseLinearBoundary:
    """Boundary vertices from the cumulative likelihood-ratio profile.

    Starts at (0, 1 - P[q=0]), then after each ratio segment j adds
    (sum of its and earlier Q masses, 1 - sum of P masses), ending at (1, 0).

    Examples:
        >>> from np_region.distributions import make_categorical_pair
        >>> r = make_categorical_pair([0.6, 0.3, 0.1], [0.1, 0.3, 0.6])
        >>> [(round(a, 12), round(b, 12)) for a, b in exact_boundary(r).vertices]
        [(0.0, 1.0), (0.1, 0.4), (0.4, 0.1), (1.0, 0.0)]
    """
    profile = lr_profile(pair)
    p_inf = profile.infinite_mass

    vertices: List[Vertex] = [(0.0, _clip_unit(1.0 - p_inf))]
    finite = [s for s in profile.segments if not math.isinf(s.ratio)]
    cum_q = np.cumsum([s.q_mass for s in finite])
    cum_p = p_inf + np.cumsum([s.p_mass for s in finite])
    for a, p in zip(cum_q[:-1].tolist(), cum_p[:-1].tolist()):
        if a >= 1.0:
            break
        vertices.append((a, _clip_unit(1.0 - p)))
    vertices.append((1.0, 0.0))

    return PiecewiseLinearBoundary(vertices=tuple(vertices))


def _clip_unit(x: float) -> float:
    return min(max(x, 0.0), 1.0)


def brute_force_boundary(pair: CategoricalPair) -> PiecewiseLinearBoundary:
    """Boundary as the lower convex hull of all 2^n deterministic tests.

    Serves as an independent check of :func:`exact_boundary`.

    Raises:
        BlowupLimitError: If the support has more than 16 items
    """
    n = pair.size
    if n > MAX_BRUTE_FORCE_SUPPORT:
        raise BlowupLimitError(
            f"Subset enumeration supports at most {MAX_BRUTE_FORCE_SUPPORT} items, got {n}"
        )

    masks = ((np.arange(2 ** n)[:, None] >> np.arange(n)) & 1).astype(float)
    alphas = np.clip(masks @ pair.q_array, 0.0, 1.0)
    betas = np.clip(1.0 - masks @ pair.p_array, 0.0, 1.0)

    # subset sums may land a rounding error short of alpha = 1
    hull = [v for v in lower_hull(zip(alphas.tolist(), betas.tolist())) if v[0] < 1.0 - ABS_TOL]
    hull.append((1.0, 0.0))
    return PiecewiseLinearBoundary(vertices=tuple(prune_collinear(hull)))


def prune_collinear(vertices: Sequence[Vertex], tol: float = ABS_TOL) -> List[Vertex]:
    """Drop interior vertices whose turn is below ``tol`` (sine of the turn angle)."""
    pruned: List[Vertex] = [tuple(vertices[0])]
    for i in range(1, len(vertices) - 1):
        o, m, n = pruned[-1], vertices[i], vertices[i + 1]
        ax, ay = m[0] - o[0], m[1] - o[1]
        bx, by = n[0] - m[0], n[1] - m[1]
        scale = math.hypot(ax, ay) * math.hypot(bx, by)
        if scale == 0.0 or abs(ax * by - ay * bx) <= tol * scale:
            continue
        pruned.append(tuple(m))
    pruned.append(tuple(vertices[-1]))
    return pruned


def eval_boundary(b: PiecewiseLinearBoundary, alpha):
    """B(alpha) by linear interpolation between vertices.

    Accepts a scalar or an array. At alpha = 0 the first vertex's beta is
    returned (the value after any vertical drop).

    Raises:
        DomainError: If any alpha lies outside [0, 1]
    """
    values = np.asarray(alpha, dtype=float)
    if not ((values >= 0.0) & (values <= 1.0)).all():
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    result = np.interp(values, b.alphas, b.betas)
    return float(result) if result.ndim == 0 else result


def region_contains(b: PiecewiseLinearBoundary, alpha: float, beta: float) -> bool:
    """Whether (alpha, beta) lies between the boundary and its reflection through (1/2, 1/2)."""
    if not (0.0 <= alpha <= 1.0 and 0.0 <= beta <= 1.0):
        return False
    lower = eval_boundary(b, alpha)
    upper = 1.0 - eval_boundary(b, 1.0 - alpha)
    return lower - ABS_TOL <= beta <= upper + ABS_TOL


def boundary_from_dict(data: Dict[str, Any]) -> PiecewiseLinearBoundary:
    """Build a boundary from ``{"vertices": [[alpha, beta], ...]}``.

    Raises:
        PairFormatError: If the document does not describe a valid boundary
    """
    vertices = _vertices_from_dict(data)
    try:
        return PiecewiseLinearBoundary(vertices=vertices)
    except ValueError as e:
        raise PairFormatError(f"Invalid boundary: {e}")


def _vertices_from_dict(data: Dict[str, Any]) -> Tuple[Vertex, ...]:
    if not isinstance(data, dict) or not isinstance(data.get('vertices'), list):
        raise PairFormatError("Boundary JSON needs a 'vertices' array")
    try:
        return tuple((float(a), float(b)) for a, b in data['vertices'])
    except (TypeError, ValueError):
        raise PairFormatError("Each vertex must be a pair of numbers")


def load_vertices(path: Union[str, Path]) -> Tuple[Vertex, ...]:
    """Read a vertex-list JSON file without checking boundary shape."""
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise PairFormatError(f"Invalid JSON in {path}: {e}")
    return _vertices_from_dict(data)


def load_boundary(path: Union[str, Path]) -> PiecewiseLinearBoundary:
    """Read a boundary JSON file."""
    vertices = load_vertices(path)
    return boundary_from_dict({'vertices': [list(v) for v in vertices]})


def boundaries_match(
    first: PiecewiseLinearBoundary,
    second: PiecewiseLinearBoundary,
    tol: float = ABS_TOL,
) -> bool:
    """Vertexwise equality within ``tol`` after collinear pruning."""
    a = prune_collinear(first.vertices)
    b = prune_collinear(second.vertices)
    if len(a) != len(b):
        return False
    return all(
        abs(x[0] - y[0]) <= tol and abs(x[1] - y[1]) <= tol for x, y in zip(a, b)
    )
