"""Lower bounds on the Neyman-Pearson boundary from f-divergences.

Any test with errors (alpha, beta) satisfies

    (1 - alpha) f(beta / (1 - alpha)) + alpha f((1 - beta) / alpha) <= D_f(P||Q),

so the smallest beta meeting this inequality bounds B(alpha) from below.
:func:`generic_lower` solves it by bisection for any generator;
:func:`named_lower` provides the closed forms of the common divergences.
"""

import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from np_region.base import (
    DomainError,
    KindMismatchError,
    NegativeDivergenceError,
    ParamOutOfRangeError,
    ValueOutOfRangeError,
)
from np_region.distributions import lr_profile
from np_region.divergences import f_divergence, generator_value, slope_at_infinity
from np_region.models.bounds import Line
from np_region.models.distributions import CategoricalPair
from np_region.models.divergences import FGenerator, valid_indicator_range
from np_region.solvers import bisect_threshold

logger = logging.getLogger(__name__)

NAMED_KINDS = ('tvd', 'hellinger', 'kl', 'alpha', 'chi2_fwd', 'chi2_rev', 'pinsker', 'indicator')
TENSORIZABLE_KINDS = ('hellinger', 'alpha')


def _perspective(gen: FGenerator, weight: float, x: float) -> float:
    """weight * f(x / weight), extended by x * f'(inf) at weight 0."""
    if weight > 0.0:
        return weight * generator_value(gen, x / weight)
    if x == 0.0:
        return 0.0
    return x * slope_at_infinity(gen)


def lower_objective(gen: FGenerator, alpha: float, beta: float) -> float:
    """Left-hand side L(alpha, beta) of the divergence inequality."""
    return _perspective(gen, 1.0 - alpha, beta) + _perspective(gen, alpha, 1.0 - beta)


def reversed_objective(gen: FGenerator, alpha: float, beta: float) -> float:
    """L with the roles of the two error types exchanged, bounded by D_f(Q||P)."""
    return _perspective(gen, beta, 1.0 - alpha) + _perspective(gen, 1.0 - beta, alpha)


def _smallest_feasible(objective: Callable[[float, float], float], D: float, alpha: float) -> float:
    # objective vanishes at beta = 1 - alpha and does not increase towards it
    return bisect_threshold(lambda beta: objective(alpha, beta) <= D, 0.0, 1.0 - alpha)


def _check_divergence(D: float) -> None:
    if math.isnan(D):
        raise ValueOutOfRangeError("divergence value is NaN")
    if D < 0:
        raise NegativeDivergenceError(f"divergence value must be nonnegative, got {D}")


def _check_open_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")


def _check_closed_alpha(alpha: float) -> None:
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")


def generic_lower(gen: FGenerator, D: float, alpha: float) -> float:
    """Smallest beta in [0, 1 - alpha] with L(alpha, beta) <= D.

    Args:
        gen: Convex generator f
        D: Value of D_f(P||Q), possibly +inf
        alpha: Type-I error in (0, 1)

    Returns:
        Lower bound on B(alpha), accurate to 1e-12

    Raises:
        DomainError: If alpha is not in (0, 1)
        NegativeDivergenceError: If D < 0

    Examples:
        >>> round(generic_lower(FGenerator(kind='tvd'), 0.5, 0.3), 9)
        0.2
        >>> round(generic_lower(FGenerator(kind='kl'), 0.0, 0.3), 9)
        0.7
    """
    _check_divergence(D)
    _check_open_alpha(alpha)
    return _smallest_feasible(lambda a, b: lower_objective(gen, a, b), D, alpha)


def generic_lower_closed(gen: FGenerator, D: float, alpha: float) -> float:
    """:func:`generic_lower` extended to alpha in {0, 1} by continuity.

    At alpha = 0 the inequality reads f(beta) + (1 - beta) f'(inf) <= D,
    which forces beta = 1 when f'(inf) is infinite; at alpha = 1 the bound is 0.
    """
    _check_divergence(D)
    _check_closed_alpha(alpha)
    if alpha == 1.0:
        return 0.0
    return _smallest_feasible(lambda a, b: lower_objective(gen, a, b), D, alpha)


def reversed_lower(gen: FGenerator, D_reverse: float, alpha: float) -> float:
    """Lower bound from the reversed divergence D_f(Q||P).

    Smallest beta with beta f((1-alpha)/beta) + (1-beta) f(alpha/(1-beta)) <= D_f(Q||P).
    Agrees with ``generic_lower(conjugate_generator(gen), D_reverse, alpha)``.
    """
    _check_divergence(D_reverse)
    _check_closed_alpha(alpha)
    if alpha == 1.0:
        return 0.0
    return _smallest_feasible(lambda a, b: reversed_objective(gen, a, b), D_reverse, alpha)


def named_lower(
    kind: str,
    value: Union[float, Sequence[float]],
    n: int,
    alpha: float,
    q: Optional[float] = None,
) -> float:
    """Closed-form (or one-dimensional) lower bounds for named divergences.

    ``value`` is the divergence statistic the kind is built on:

    - ``tvd``: total variation distance
    - ``hellinger``: Hellinger affinity rho = 1 - H^2
    - ``alpha``: Chernoff coefficient ``chernoff_coefficient(pair, q)``
    - ``kl`` and ``pinsker``: KL(P||Q)
    - ``chi2_fwd``: chi^2(P||Q); ``chi2_rev``: chi^2(Q||P)
    - ``indicator``: the ratio bounds (lower, upper)

    The tensorizable kinds ``hellinger`` and ``alpha`` replace rho by rho**n.

    Args:
        kind: One of the named kinds above
        value: Divergence statistic (a pair of floats for ``indicator``)
        n: Number of i.i.d. observations
        alpha: Type-I error in [0, 1]
        q: Exponent of the ``alpha`` kind, in (0, 1)

    Returns:
        Lower bound on B(alpha), clamped to [0, 1 - alpha]

    Raises:
        KindMismatchError: If the kind is unknown or n > 1 for a kind that does not tensorize
        ValueOutOfRangeError: If the value is outside the kind's range
        ParamOutOfRangeError: If q is missing or outside (0, 1) for the alpha kind
        DomainError: If alpha is outside [0, 1]

    Examples:
        >>> round(named_lower('hellinger', 0.8, 1, 0.16), 6)
        0.243258
        >>> named_lower('pinsker', 2.0, 1, 0.3)
        0.0
    """
    if kind not in NAMED_KINDS:
        raise KindMismatchError(f"Unknown lower-bound kind {kind!r}")
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueOutOfRangeError(f"n must be a positive integer, got {n!r}")
    if n > 1 and kind not in TENSORIZABLE_KINDS:
        raise KindMismatchError(f"Kind {kind!r} does not tensorize; n must be 1")
    _check_closed_alpha(alpha)

    if kind == 'indicator':
        lower, upper = _indicator_value(value)
        return _clamp(_indicator_bound(lower, upper, alpha), alpha)

    v = _scalar_value(kind, value)

    if kind == 'tvd':
        return _clamp(1.0 - v - alpha, alpha)
    if kind == 'hellinger':
        return _clamp(_hellinger_curve(v ** n, alpha), alpha)
    if kind == 'alpha':
        if q is None or not 0.0 < q < 1.0:
            raise ParamOutOfRangeError(f"alpha kind needs q in (0, 1), got {q}")
        return _clamp(_chernoff_lower(q, v ** n, alpha), alpha)
    if kind == 'kl':
        return _clamp(generic_lower_closed(FGenerator(kind='kl'), v, alpha), alpha)
    if kind == 'pinsker':
        return _clamp(1.0 - math.sqrt(v / 2.0) - alpha, alpha)
    if kind == 'chi2_fwd':
        return _clamp(1.0 - alpha - math.sqrt(v * alpha * (1.0 - alpha)), alpha)
    return _clamp(_chi2_reverse_root(v, alpha), alpha)


def _clamp(beta: float, alpha: float) -> float:
    if math.isnan(beta):
        return 0.0
    return min(max(beta, 0.0), 1.0 - alpha)


def _scalar_value(kind: str, value) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise ValueOutOfRangeError(f"Kind {kind!r} takes a single numeric value, got {value!r}")
    if math.isnan(v) or v < 0:
        raise ValueOutOfRangeError(f"Kind {kind!r} needs a nonnegative value, got {v}")
    if kind in ('tvd', 'hellinger', 'alpha') and v > 1.0:
        raise ValueOutOfRangeError(f"Kind {kind!r} needs a value in [0, 1], got {v}")
    return v


def _indicator_value(value) -> Tuple[float, float]:
    try:
        lower, upper = (float(x) for x in value)
    except (TypeError, ValueError):
        raise ValueOutOfRangeError(f"indicator kind takes (lower, upper), got {value!r}")
    if not valid_indicator_range(lower, upper):
        raise ValueOutOfRangeError(
            f"indicator kind needs 0 <= lower < 1 < upper < inf, got ({lower}, {upper})"
        )
    return lower, upper


def _hellinger_curve(rho: float, alpha: float) -> float:
    # alpha = sin^2(theta), beta = sin^2(asin(rho) - theta) on the curve
    angle = math.asin(min(rho, 1.0)) - math.asin(min(math.sqrt(alpha), 1.0))
    return math.sin(max(angle, 0.0)) ** 2


def _chernoff_lower(q: float, rho: float, alpha: float) -> float:
    # (1-beta)^q alpha^(1-q) + beta^q (1-alpha)^(1-q) >= rho, increasing in beta up to 1-alpha
    if rho == 0.0:
        return 0.0
    a_term = alpha ** (1.0 - q)
    b_term = (1.0 - alpha) ** (1.0 - q)

    def feasible(beta: float) -> bool:
        return (1.0 - beta) ** q * a_term + beta ** q * b_term >= rho

    return bisect_threshold(feasible, 0.0, 1.0 - alpha)


def _chi2_reverse_root(chi2: float, alpha: float) -> float:
    # smaller root of (1+c) beta^2 - (2(1-alpha)+c) beta + (1-alpha)^2, in cancellation-free form
    if math.isinf(chi2):
        return 0.0
    c = chi2
    disc = math.sqrt(c * c + 4.0 * c * alpha * (1.0 - alpha))
    denom = 2.0 * (1.0 - alpha) + c + disc
    if denom == 0.0:
        return 0.0
    return 2.0 * (1.0 - alpha) ** 2 / denom


def _indicator_bound(lower: float, upper: float, alpha: float) -> float:
    candidates = [
        -lower * alpha + lower,
        -upper * alpha + 1.0,
        (1.0 - alpha) / upper,
    ]
    if lower > 0.0:
        candidates.append(1.0 - alpha / lower)
    return max(candidates)


def indicator_parameters(pair: CategoricalPair) -> Tuple[float, float]:
    """Tightest (lower, upper) for which the indicator bound holds on ``pair``.

    The four-line bound needs every ratio p/q inside both [lower, upper]
    and [1/upper, 1/lower]; this returns
    (min(r_min, 1/r_max), max(r_max, 1/r_min)), moved one ulp off 1 when
    P = Q so that lower < 1 < upper.

    Raises:
        ValueOutOfRangeError: If some item has p = 0 or q = 0
    """
    ratios = lr_profile(pair).ratios
    r_max, r_min = float(ratios[0]), float(ratios[-1])
    if math.isinf(r_max) or r_min == 0.0:
        raise ValueOutOfRangeError("indicator bound needs p > 0 and q > 0 on every item")
    lower = min(r_min, 1.0 / r_max, math.nextafter(1.0, 0.0))
    upper = max(r_max, 1.0 / r_min, math.nextafter(1.0, 2.0))
    return lower, upper


def hockey_stick_line(gamma: float, D_gamma: float) -> Line:
    """Supporting line beta >= -gamma*alpha + 1 - D_gamma.

    Examples:
        >>> str(hockey_stick_line(1.0, 0.5))
        '1*alpha + 1*beta = 0.5 (lower)'
    """
    if math.isnan(gamma) or gamma < 0 or math.isinf(gamma):
        raise ParamOutOfRangeError(f"gamma must be finite and nonnegative, got {gamma}")
    _check_divergence(D_gamma)
    return Line(a=gamma, b=1.0, c=1.0 - D_gamma, orientation='lower')


def hockey_lines(pair: CategoricalPair) -> List[Line]:
    """Hockey-stick lines at gamma = 0 and every finite likelihood ratio of the pair."""
    ratios = sorted({float(r) for r in lr_profile(pair).ratios if math.isfinite(r)} | {0.0})
    return [
        hockey_stick_line(g, f_divergence(pair, FGenerator(kind='hockey_stick', gamma=g)).value)
        for g in ratios
    ]


def hockey_envelope(pair: CategoricalPair, alpha):
    """Upper envelope of the hockey-stick supporting lines, clamped at 0.

    It coincides with the exact boundary. Accepts a scalar or an array.

    Raises:
        DomainError: If any alpha lies outside [0, 1]
    """
    values = np.asarray(alpha, dtype=float)
    if not ((values >= 0.0) & (values <= 1.0)).all():
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    lines = hockey_lines(pair)
    envelope = np.max([line.c - line.a * values for line in lines], axis=0)
    envelope = np.maximum(envelope, 0.0)
    return float(envelope) if envelope.ndim == 0 else envelope


def hellinger_supporting_line(s: float, rho: float) -> Line:
    """Supporting line s*alpha + (2-s)*beta >= 1 - sqrt(1 - s(2-s) rho^2).

    Raises:
        ParamOutOfRangeError: If s is not in (0, 2) or rho not in (0, 1]
    """
    if not 0.0 < s < 2.0:
        raise ParamOutOfRangeError(f"s must lie in (0, 2), got {s}")
    if not 0.0 < rho <= 1.0:
        raise ParamOutOfRangeError(f"rho must lie in (0, 1], got {rho}")
    c = 1.0 - math.sqrt(max(1.0 - s * (2.0 - s) * rho * rho, 0.0))
    return Line(a=s, b=2.0 - s, c=c, orientation='lower')


def hellinger_tangent_parameter(rho: float, alpha: float) -> float:
    """Parameter s of the Hellinger supporting line touching the curve at ``alpha``.

    With gamma = asin(rho) and theta = asin(sqrt(alpha)),
    s = sin(2 gamma - 2 theta) / (rho cos(gamma - 2 theta)).

    Raises:
        ParamOutOfRangeError: If rho not in (0, 1] or alpha beyond the curve's zero
    """
    if not 0.0 < rho <= 1.0:
        raise ParamOutOfRangeError(f"rho must lie in (0, 1], got {rho}")
    gamma = math.asin(min(rho, 1.0))
    theta = math.asin(min(math.sqrt(alpha), 1.0))
    if not 0.0 < theta < gamma:
        raise ParamOutOfRangeError(f"alpha={alpha} is not on the curve's decreasing part")
    return math.sin(2.0 * gamma - 2.0 * theta) / (rho * math.cos(gamma - 2.0 * theta))
