"""Value types for np-region.

All models are immutable pydantic models. Vectors are stored as tuples and
exposed as numpy arrays through properties.
"""

from np_region.models.distributions import (
    AnalyticFamily,
    CategoricalPair,
    GridSpec,
    LRProfile,
    LRSegment,
)
from np_region.models.divergences import DivergenceValue, FGenerator
from np_region.models.boundary import CdfTable, PiecewiseLinearBoundary
from np_region.models.bounds import BoundCurve, Line
from np_region.models.decision import MixingPlan, PriorPair

__all__ = [
    # Distributions
    'AnalyticFamily',
    'CategoricalPair',
    'GridSpec',
    'LRProfile',
    'LRSegment',
    # Divergences
    'DivergenceValue',
    'FGenerator',
    # Boundaries
    'CdfTable',
    'PiecewiseLinearBoundary',
    # Bounds
    'BoundCurve',
    'Line',
    # Decision
    'MixingPlan',
    'PriorPair',
]
