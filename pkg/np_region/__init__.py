"""np-region - Neyman-Pearson regions of finite-support distribution pairs.

This package provides:
- Exact Neyman-Pearson boundaries of categorical pairs
- f-divergences, Chernoff coefficients and alpha-divergences
- Lower bounds on the boundary from divergence values
- Chernoff upper bounds and sample-size queries
- Realization of prescribed boundaries by distribution pairs
- Bayes error rates, convex conjugates and ROC mixing

Examples:
    >>> # Exact boundary
    >>> from np_region import make_categorical_pair, exact_boundary
    >>> pair = make_categorical_pair([0.6, 0.3, 0.1], [0.1, 0.3, 0.6])
    >>> boundary = exact_boundary(pair)

    >>> # Lower bound from the Hellinger affinity
    >>> from np_region import chernoff_coefficient, named_lower
    >>> rho = chernoff_coefficient(pair, 0.5)
    >>> beta = named_lower('hellinger', rho, 1, 0.25)

    >>> # Bayes error under equal priors
    >>> from np_region import bayes_error, PriorPair
    >>> ber, vertex = bayes_error(boundary, PriorPair(pi_p=0.5))
"""

__version__ = "0.1.0"

from np_region.base import NPRegionError

from np_region.models import (
    AnalyticFamily,
    BoundCurve,
    CategoricalPair,
    CdfTable,
    DivergenceValue,
    FGenerator,
    GridSpec,
    Line,
    LRProfile,
    MixingPlan,
    PiecewiseLinearBoundary,
    PriorPair,
)

from np_region.distributions import (
    discretize_analytic,
    lr_profile,
    make_categorical_pair,
    product_pair,
    swap_pair,
    tensor_power,
)
from np_region.divergences import (
    alpha_divergence,
    chernoff_coefficient,
    f_divergence,
)
from np_region.boundary import (
    brute_force_boundary,
    eval_boundary,
    exact_boundary,
    region_contains,
)
from np_region.lower_bounds import (
    generic_lower,
    hellinger_supporting_line,
    hockey_envelope,
    hockey_stick_line,
    named_lower,
)
from np_region.upper_bounds import (
    chernoff_envelope,
    chernoff_tangent_line,
    convex_refine,
    min_sample_size,
    refined_chernoff,
)
from np_region.realization import (
    realize_categorical,
    realize_unit_interval,
    verify_realization,
)
from np_region.decision import (
    bayes_error,
    ber_bounds,
    conjugate,
    roc_mixing_weight,
    roc_points,
)

__all__ = [
    # Errors
    'NPRegionError',
    # Models
    'AnalyticFamily',
    'BoundCurve',
    'CategoricalPair',
    'CdfTable',
    'DivergenceValue',
    'FGenerator',
    'GridSpec',
    'Line',
    'LRProfile',
    'MixingPlan',
    'PiecewiseLinearBoundary',
    'PriorPair',
    # Distributions
    'discretize_analytic',
    'lr_profile',
    'make_categorical_pair',
    'product_pair',
    'swap_pair',
    'tensor_power',
    # Divergences
    'alpha_divergence',
    'chernoff_coefficient',
    'f_divergence',
    # Boundary
    'brute_force_boundary',
    'eval_boundary',
    'exact_boundary',
    'region_contains',
    # Lower bounds
    'generic_lower',
    'hellinger_supporting_line',
    'hockey_envelope',
    'hockey_stick_line',
    'named_lower',
    # Upper bounds
    'chernoff_envelope',
    'chernoff_tangent_line',
    'convex_refine',
    'min_sample_size',
    'refined_chernoff',
    # Realization
    'realize_categorical',
    'realize_unit_interval',
    'verify_realization',
    # Decision
    'bayes_error',
    'ber_bounds',
    'conjugate',
    'roc_mixing_weight',
    'roc_points',
]
