"""f-generators, f-divergences, alpha-divergences and Chernoff coefficients.

All values live on the extended half-line: generators may return +inf and
``0 * inf`` is taken to be 0. The slope at infinity f'(inf) = lim f(t)/t is
tabulated per kind rather than computed numerically.
"""

import math
from typing import Dict

import numpy as np
from scipy.special import xlogy

from np_region.base import DivergenceError, ExponentOutOfRangeError
from np_region.distributions import swap_pair
from np_region.models.distributions import CategoricalPair
from np_region.models.divergences import DivergenceValue, FGenerator

INF = math.inf


def slope_at_infinity(gen: FGenerator) -> float:
    """f'(inf) = lim_{t -> inf} f(t)/t = lim_{t -> 0} t*f(1/t).

    Examples:
        >>> slope_at_infinity(FGenerator(kind='hockey_stick', gamma=2.0))
        1.0
    """
    kind = gen.kind
    if kind in ('tvd', 'hellinger2'):
        return 0.5
    if kind in ('kl', 'chi2', 'indicator'):
        return INF
    if kind == 'reverse_kl':
        return 0.0
    if kind == 'hockey_stick':
        return 1.0
    # alpha: the t^(1-q) term dominates for q < 0
    q = gen.q
    return INF if q < 0 else 1.0 / q


def generator_value(gen: FGenerator, t: float) -> float:
    """Evaluate f(t) for t in [0, inf]; t = inf returns f'(inf).

    Examples:
        >>> generator_value(FGenerator(kind='kl'), 1.0)
        0.0
        >>> generator_value(FGenerator(kind='indicator', lower=1/6, upper=6.0), 7.0)
        inf
    """
    if t < 0:
        raise DivergenceError(f"Generators are defined on [0, inf], got t={t}")
    if math.isinf(t):
        return slope_at_infinity(gen)

    kind = gen.kind
    if kind == 'tvd':
        return 0.5 * abs(t - 1.0)
    if kind == 'kl':
        return t * math.log(t) if t > 0 else 0.0
    if kind == 'reverse_kl':
        return -math.log(t) if t > 0 else INF
    if kind == 'hellinger2':
        return 0.5 * (1.0 - math.sqrt(t)) ** 2
    if kind == 'hockey_stick':
        return max(t - gen.gamma, 0.0)
    if kind == 'chi2':
        return (t - 1.0) ** 2
    if kind == 'indicator':
        return 0.0 if gen.lower < t < gen.upper else INF

    q = gen.q
    if t == 0.0:
        return 1.0 / (1.0 - q) if q < 1.0 else INF
    return (q + (1.0 - q) * t - t ** (1.0 - q)) / (q * (1.0 - q))


def generator_values(gen: FGenerator, t: np.ndarray) -> np.ndarray:
    """Vectorized f(t) for finite t >= 0."""
    t = np.asarray(t, dtype=float)
    kind = gen.kind
    with np.errstate(divide='ignore', over='ignore', invalid='ignore'):
        if kind == 'tvd':
            return 0.5 * np.abs(t - 1.0)
        if kind == 'kl':
            return xlogy(t, t)
        if kind == 'reverse_kl':
            return -np.log(t)
        if kind == 'hellinger2':
            return 0.5 * (1.0 - np.sqrt(t)) ** 2
        if kind == 'hockey_stick':
            return np.maximum(t - gen.gamma, 0.0)
        if kind == 'chi2':
            return (t - 1.0) ** 2
        if kind == 'indicator':
            return np.where((t > gen.lower) & (t < gen.upper), 0.0, INF)

        q = gen.q
        values = (q + (1.0 - q) * t - np.power(t, 1.0 - q)) / (q * (1.0 - q))
        if q > 1.0:
            values = np.where(t == 0.0, INF, values)
        return values


def conjugate_generator(gen: FGenerator) -> FGenerator:
    """Generator of the reversed divergence, f*(t) = t*f(1/t).

    Defined for kl <-> reverse_kl, hellinger2, tvd and alpha(q) <-> alpha(1-q).

    Raises:
        DivergenceError: For kinds whose conjugate is outside the generator table
    """
    kind = gen.kind
    if kind in ('tvd', 'hellinger2'):
        return gen
    if kind == 'kl':
        return FGenerator(kind='reverse_kl')
    if kind == 'reverse_kl':
        return FGenerator(kind='kl')
    if kind == 'alpha':
        return FGenerator(kind='alpha', q=1.0 - gen.q)
    raise DivergenceError(f"No tabulated conjugate for generator {gen.spec!r}")


def f_divergence(pair: CategoricalPair, gen: FGenerator) -> DivergenceValue:
    """D_f(P||Q) = sum_{q>0} q f(p/q) + f'(inf) * P[q = 0].

    Examples:
        >>> from np_region.distributions import make_categorical_pair
        >>> r = make_categorical_pair([0.6, 0.3, 0.1], [0.1, 0.3, 0.6])
        >>> round(f_divergence(r, FGenerator(kind="tvd")).value, 12)
        0.5
    """
    p, q = pair.p_array, pair.q_array
    support = q > 0
    terms = q[support] * generator_values(gen, p[support] / q[support])
    total = math.fsum(terms.tolist())

    outside = float(p[~support].sum())
    if outside > 0:
        total += slope_at_infinity(gen) * outside

    return DivergenceValue(value=max(total, 0.0))


def chernoff_coefficient(pair: CategoricalPair, q: float) -> float:
    """Chernoff coefficient rho_q = sum p^q q^(1-q); rho_1/2 is the Hellinger affinity.

    Raises:
        ExponentOutOfRangeError: If q is not in (0, 1)
    """
    if not 0.0 < q < 1.0:
        raise ExponentOutOfRangeError(f"Chernoff exponent must lie in (0, 1), got {q}")
    terms = np.power(pair.p_array, q) * np.power(pair.q_array, 1.0 - q)
    return min(max(math.fsum(terms.tolist()), 0.0), 1.0)


def alpha_divergence(pair: CategoricalPair, q: float) -> DivergenceValue:
    """Divergence of the alpha(q) generator.

    For q in (0, 1) this is (1 - rho_{1-q}) / (q(1-q)) with
    rho_x = sum p^x q^(1-x); q = 0 gives KL(P||Q) and q = 1 gives KL(Q||P),
    the continuous limits. Other real q use the generator sum directly.
    """
    if q == 0.0:
        return f_divergence(pair, FGenerator(kind='kl'))
    if q == 1.0:
        return f_divergence(pair, FGenerator(kind='reverse_kl'))
    if 0.0 < q < 1.0:
        rho = chernoff_coefficient(pair, 1.0 - q)
        return DivergenceValue(value=max((1.0 - rho) / (q * (1.0 - q)), 0.0))
    return f_divergence(pair, FGenerator(kind='alpha', q=q))


def divergence_table(pair: CategoricalPair) -> Dict[str, float]:
    """Common divergences of a pair, keyed by name."""
    reverse = swap_pair(pair)
    return {
        'tvd': f_divergence(pair, FGenerator(kind='tvd')).value,
        'kl': f_divergence(pair, FGenerator(kind='kl')).value,
        'reverse_kl': f_divergence(pair, FGenerator(kind='reverse_kl')).value,
        'hellinger2': f_divergence(pair, FGenerator(kind='hellinger2')).value,
        'chi2': f_divergence(pair, FGenerator(kind='chi2')).value,
        'chi2_reverse': f_divergence(reverse, FGenerator(kind='chi2')).value,
        'hellinger_affinity': chernoff_coefficient(pair, 0.5),
    }
