"""Construction, discretization and products of finite-support distribution pairs."""

import itertools
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, Iterable, List, Literal, Optional, Sequence, Union

import numpy as np
from scipy import stats

from np_region.base import (
    ABS_TOL,
    MAX_PRODUCT_SUPPORT,
    RENORMALIZE_TOL,
    BlowupLimitError,
    DeadItemError,
    DegenerateGridError,
    DistributionError,
    LengthMismatchError,
    NegativeMassError,
    NonFiniteMassError,
    NotNormalizedError,
    PairFormatError,
    UnsupportedFamilyError,
)
from np_region.models.distributions import (
    AnalyticFamily,
    CategoricalPair,
    GridSpec,
    LRProfile,
    LRSegment,
)

logger = logging.getLogger(__name__)


def make_categorical_pair(
    p: Sequence[float],
    q: Sequence[float],
    labels: Optional[Sequence[str]] = None,
    metadata: Optional[Dict[str, float]] = None,
) -> CategoricalPair:
    """Validate two mass vectors and build a pair.

    Sums within 1e-9 of one are renormalized exactly; larger deviations
    are rejected.

    Args:
        p: Masses of P
        q: Masses of Q
        labels: Optional item identifiers (default x1, x2, ...)
        metadata: Optional numeric side information

    Returns:
        Validated CategoricalPair

    Raises:
        LengthMismatchError: If the vectors (or labels) differ in length or are empty
        NonFiniteMassError: If an entry is NaN or infinite
        NegativeMassError: If an entry is negative
        NotNormalizedError: If a sum deviates from one by more than 1e-9
        DeadItemError: If an item has zero mass under both P and Q

    Examples:
        >>> pair = make_categorical_pair([0.6, 0.3, 0.1], [0.1, 0.3, 0.6])
        >>> pair.labels
        ('x1', 'x2', 'x3')
    """
    try:
        p_arr = np.asarray(p, dtype=float).reshape(-1)
        q_arr = np.asarray(q, dtype=float).reshape(-1)
    except (TypeError, ValueError) as e:
        raise PairFormatError(f"Mass vectors must be numeric: {e}")

    n = len(p_arr)
    if n == 0 or len(q_arr) != n:
        raise LengthMismatchError(f"Mass vectors have lengths {len(p_arr)} and {len(q_arr)}")
    if labels is None:
        labels = [f"x{i + 1}" for i in range(n)]
    elif len(labels) != n:
        raise LengthMismatchError(f"Got {len(labels)} labels for {n} items")

    if not (np.isfinite(p_arr).all() and np.isfinite(q_arr).all()):
        raise NonFiniteMassError("Mass vectors must be finite")
    if (p_arr < 0).any() or (q_arr < 0).any():
        raise NegativeMassError("Masses must be nonnegative")

    p_arr = _normalized(p_arr, 'P')
    q_arr = _normalized(q_arr, 'Q')

    dead = np.flatnonzero((p_arr == 0) & (q_arr == 0))
    if dead.size:
        raise DeadItemError(f"Items with zero mass under P and Q: {[labels[i] for i in dead]}")

    return CategoricalPair(
        labels=tuple(str(x) for x in labels),
        p=tuple(p_arr.tolist()),
        q=tuple(q_arr.tolist()),
        metadata=dict(metadata or {}),
    )


def _normalized(masses: np.ndarray, name: str) -> np.ndarray:
    total = math.fsum(masses.tolist())
    if abs(total - 1.0) > RENORMALIZE_TOL:
        raise NotNormalizedError(f"{name} masses sum to {total!r}")
    return masses / total


def swap_pair(pair: CategoricalPair) -> CategoricalPair:
    """Exchange the roles of P and Q."""
    return CategoricalPair(labels=pair.labels, p=pair.q, q=pair.p, metadata=pair.metadata)


def pair_from_dict(data: Dict[str, Any]) -> CategoricalPair:
    """Build a pair from the JSON schema ``{"labels": [...], "p": [...], "q": [...]}``.

    Raises:
        PairFormatError: If required keys are missing or have the wrong type
    """
    if not isinstance(data, dict) or 'p' not in data or 'q' not in data:
        raise PairFormatError("Pair JSON needs 'p' and 'q' arrays")
    if not isinstance(data['p'], list) or not isinstance(data['q'], list):
        raise PairFormatError("'p' and 'q' must be arrays of numbers")
    labels = data.get('labels')
    if labels is not None and not isinstance(labels, list):
        raise PairFormatError("'labels' must be an array of strings")
    return make_categorical_pair(data['p'], data['q'], labels=labels)


def load_pair(path: Union[str, Path]) -> CategoricalPair:
    """Read a pair JSON file.

    Raises:
        OSError: If the file cannot be read
        PairFormatError: If the content is not a valid pair document
    """
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise PairFormatError(f"Invalid JSON in {path}: {e}")
    return pair_from_dict(data)


def frozen_distribution(family: AnalyticFamily):
    """Map an AnalyticFamily to a frozen scipy.stats distribution.

    Raises:
        UnsupportedFamilyError: If the kind is unknown or the parameters are invalid
    """
    params = family.params
    if len(params) != 2 or not all(math.isfinite(x) for x in params):
        raise UnsupportedFamilyError(f"{family.kind} needs two finite parameters, got {params}")
    a, b = params

    if family.kind == 'gaussian':
        if b <= 0:
            raise UnsupportedFamilyError(f"gaussian sigma must be positive, got {b}")
        return stats.norm(loc=a, scale=b)
    if family.kind == 'uniform':
        if b <= a:
            raise UnsupportedFamilyError(f"uniform needs a < b, got ({a}, {b})")
        return stats.uniform(loc=a, scale=b - a)
    if family.kind == 'beta':
        if a <= 0 or b <= 0:
            raise UnsupportedFamilyError(f"beta parameters must be positive, got ({a}, {b})")
        return stats.beta(a, b)

    raise UnsupportedFamilyError(f"Unsupported family {family.kind!r}")


def _cell_masses(dist, grid: GridSpec, rule: str) -> np.ndarray:
    if rule == 'midpoint':
        masses = dist.pdf(grid.midpoints) * grid.width
    else:
        # Survival differences keep precision in the upper tail
        edges = grid.edges
        from_cdf = np.diff(dist.cdf(edges))
        from_sf = -np.diff(dist.sf(edges))
        masses = np.where(grid.midpoints <= dist.median(), from_cdf, from_sf)
    masses = np.nan_to_num(masses, nan=0.0, posinf=0.0)
    return np.clip(masses, 0.0, None)


def discretize_analytic(
    pf: AnalyticFamily,
    qf: AnalyticFamily,
    grid: GridSpec,
    rule: Literal['cdf', 'midpoint'] = 'cdf',
) -> CategoricalPair:
    """Discretize two 1-D families onto a common equal-width cell grid.

    With ``rule='cdf'`` each cell carries its exact probability (CDF
    increment); with ``rule='midpoint'`` it carries density times width.
    Both vectors are renormalized over the window. The mass lost outside
    the window is reported in ``metadata['p_truncated']`` and
    ``metadata['q_truncated']``; cells empty under both families are
    dropped and counted in ``metadata['dropped_cells']``.

    Note:
        CDF increments are the default even where a midpoint rule is the
        customary reading. Densities with an integrable pole at the window
        edge, such as Beta(1, 1/2) at 1, lose mass in the edge cell under
        the midpoint rule: uniform against Beta(1, 1/2) on 4096 cells then
        misses the boundary (1 - alpha)^2 by about 2.4e-3, while the CDF
        rule stays within 2e-3.

    Args:
        pf: Family of P
        qf: Family of Q
        grid: Window and number of cells
        rule: Cell integration rule

    Returns:
        CategoricalPair with one item per nonempty cell

    Raises:
        UnsupportedFamilyError: If a family is unknown or badly parameterized
        DegenerateGridError: If the window is empty, has fewer than 2 cells,
            or carries no mass of P or Q

    Examples:
        >>> g = GridSpec(lower=-10.0, upper=10.0, nodes=2048)
        >>> pair = discretize_analytic(AnalyticFamily.parse("gaussian:0,1"),
        ...                            AnalyticFamily.parse("gaussian:0,1"), g)
        >>> pair.p == pair.q
        True
    """
    if rule not in ('cdf', 'midpoint'):
        raise DistributionError(f"Unknown integration rule {rule!r}")
    if not (math.isfinite(grid.lower) and math.isfinite(grid.upper)) or grid.lower >= grid.upper:
        raise DegenerateGridError(f"Grid window [{grid.lower}, {grid.upper}] is empty")
    if grid.nodes < 2:
        raise DegenerateGridError(f"Grid needs at least 2 cells, got {grid.nodes}")

    p_dist = frozen_distribution(pf)
    q_dist = frozen_distribution(qf)
    p_raw = _cell_masses(p_dist, grid, rule)
    q_raw = _cell_masses(q_dist, grid, rule)

    keep = (p_raw > 0) | (q_raw > 0)
    if not p_raw[keep].sum() > 0 or not q_raw[keep].sum() > 0:
        raise DegenerateGridError("Grid window carries no mass of P or Q")

    def truncated(dist) -> float:
        return float(dist.cdf(grid.lower) + dist.sf(grid.upper))

    metadata = {
        'p_truncated': truncated(p_dist),
        'q_truncated': truncated(q_dist),
        'dropped_cells': float(grid.nodes - int(keep.sum())),
    }
    logger.debug(
        "discretized %s vs %s on %d cells: truncated mass %.3g / %.3g, %d empty cells dropped",
        pf.spec, qf.spec, grid.nodes, metadata['p_truncated'], metadata['q_truncated'],
        int(metadata['dropped_cells']),
    )

    edges = grid.edges
    labels = [
        f"[{edges[i]:.9g},{edges[i + 1]:.9g})" for i in np.flatnonzero(keep)
    ]
    p_kept, q_kept = p_raw[keep], q_raw[keep]
    return CategoricalPair(
        labels=tuple(labels),
        p=tuple((p_kept / p_kept.sum()).tolist()),
        q=tuple((q_kept / q_kept.sum()).tolist()),
        metadata=metadata,
    )


def product_pair(pairs: Iterable[CategoricalPair]) -> CategoricalPair:
    """Product of independent pairs over the tuple support.

    Item labels are joined with ``|``. Products that vanish under both P
    and Q are null events and are dropped.

    Raises:
        DistributionError: If no pair is given
        BlowupLimitError: If the product support would exceed 10^6 items
    """
    pairs = list(pairs)
    if not pairs:
        raise DistributionError("product_pair needs at least one pair")

    size = math.prod(pair.size for pair in pairs)
    if size > MAX_PRODUCT_SUPPORT:
        raise BlowupLimitError(
            f"Product support {size} exceeds the limit of {MAX_PRODUCT_SUPPORT} items"
        )

    p, q = pairs[0].p_array, pairs[0].q_array
    for pair in pairs[1:]:
        p = np.outer(p, pair.p_array).ravel()
        q = np.outer(q, pair.q_array).ravel()

    labels: List[str] = [
        "|".join(combo) for combo in itertools.product(*(pair.labels for pair in pairs))
    ]
    keep = (p > 0) | (q > 0)
    if not keep.all():
        logger.debug("dropping %d null items from a product of %d pairs", int((~keep).sum()), len(pairs))
        p, q = p[keep], q[keep]
        labels = [label for label, k in zip(labels, keep) if k]

    logger.debug("product support has %d items", len(p))
    return CategoricalPair(
        labels=tuple(labels),
        p=tuple((p / p.sum()).tolist()),
        q=tuple((q / q.sum()).tolist()),
    )


def tensor_power(pair: CategoricalPair, n: int) -> CategoricalPair:
    """n-fold product of a pair with itself (n i.i.d. observations).

    Raises:
        DistributionError: If n < 1
        BlowupLimitError: If size**n exceeds 10^6

    Examples:
        >>> r = make_categorical_pair([0.6, 0.3, 0.1], [0.1, 0.3, 0.6])
        >>> tensor_power(r, 2).size
        9
    """
    if n < 1:
        raise DistributionError(f"tensor_power needs n >= 1, got {n}")
    if n == 1:
        return pair
    return product_pair([pair] * n)


def lr_profile(pair: CategoricalPair) -> LRProfile:
    """Likelihood-ratio step profile of a pair.

    Items are sorted by p/q descending (q = 0 items first, as ratio +inf)
    and items with equal ratios are merged. Two adjacent items are equal
    when their cross-products p_a*q_b and p_b*q_a agree to a relative
    1e-12.

    Examples:
        >>> r = make_categorical_pair([0.5, 0.5], [0.25, 0.75])
        >>> [round(s.ratio, 6) for s in lr_profile(r).segments]
        [2.0, 0.666667]
    """
    p, q = pair.p_array, pair.q_array
    with np.errstate(divide='ignore'):
        ratio = np.where(q > 0, p / np.where(q > 0, q, 1.0), np.inf)
    order = np.argsort(-ratio, kind='stable')
    p, q = p[order], q[order]

    lhs = p[:-1] * q[1:]
    rhs = p[1:] * q[:-1]
    tie = np.abs(lhs - rhs) <= ABS_TOL * np.maximum(lhs, rhs)
    starts = np.concatenate(([0], np.flatnonzero(~tie) + 1))

    seg_p = np.add.reduceat(p, starts)
    seg_q = np.add.reduceat(q, starts)

    segments = []
    for sp, sq in zip(seg_p.tolist(), seg_q.tolist()):
        segments.append(LRSegment(ratio=sp / sq if sq > 0 else math.inf, p_mass=sp, q_mass=sq))
    return LRProfile(segments=tuple(segments))
