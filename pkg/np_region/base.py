"""Shared error hierarchy and numerical tolerances for np-region."""

import math

# Containment, tie-merge and equality tolerance. All quantities are O(1).
ABS_TOL = 1e-12

# Mass vectors whose sums deviate by at most this much are renormalized.
RENORMALIZE_TOL = 1e-9

# Bisection stops at this bracket width or after BISECT_MAX_ITER halvings.
BISECT_WIDTH = 1e-12
BISECT_MAX_ITER = 200

# Largest support produced by products of pairs.
MAX_PRODUCT_SUPPORT = 1_000_000

# Largest support accepted by subset enumeration.
MAX_BRUTE_FORCE_SUPPORT = 16

INF = math.inf


class NPRegionError(Exception):
    """Base exception for np-region domain errors."""
    pass


# Distributions

class DistributionError(NPRegionError):
    """Invalid distribution pair or discretization request."""
    pass


class LengthMismatchError(DistributionError):
    """Mass vectors (or labels) have different or zero lengths."""
    pass


class NegativeMassError(DistributionError):
    """A mass entry is negative."""
    pass


class NonFiniteMassError(DistributionError):
    """A mass entry is NaN or infinite."""
    pass


class NotNormalizedError(DistributionError):
    """A mass vector does not sum to one within the renormalization tolerance."""
    pass


class DeadItemError(DistributionError):
    """An item carries zero mass under both distributions."""
    pass


class UnsupportedFamilyError(DistributionError):
    """Unknown analytic family or invalid family parameters."""
    pass


class DegenerateGridError(DistributionError):
    """Grid window is empty or has too few nodes."""
    pass


class BlowupLimitError(DistributionError):
    """Requested support exceeds the enumeration or product limit."""
    pass


class PairFormatError(DistributionError):
    """Serialized pair or boundary does not follow the JSON schema."""
    pass


# Divergences

class DivergenceError(NPRegionError):
    """Invalid divergence or generator request."""
    pass


class ExponentOutOfRangeError(DivergenceError):
    """Chernoff exponent outside its admissible range."""
    pass


class NegativeDivergenceError(DivergenceError):
    """A divergence value passed to a bound is negative."""
    pass


# Bounds

class BoundError(NPRegionError):
    """Invalid bound evaluation request."""
    pass


class DomainError(BoundError):
    """Abscissa alpha outside the admissible interval."""
    pass


class KindMismatchError(BoundError):
    """Bound kind does not support the requested option."""
    pass


class ValueOutOfRangeError(BoundError):
    """Divergence or coefficient value outside the kind's admissible range."""
    pass


class ParamOutOfRangeError(BoundError):
    """Line or curve parameter outside its admissible range."""
    pass


class DegenerateTargetError(BoundError):
    """Sample-size query has no finite answer."""
    pass


class BoundaryMismatchError(BoundError):
    """Two boundary computations for the same pair disagree."""
    pass


# Realization

class RealizationError(NPRegionError):
    """Prescribed boundary cannot be realized."""
    pass


class NonConvexInputError(RealizationError):
    """Vertex list is not strictly convex."""
    pass


class NonMonotoneInputError(RealizationError):
    """Vertex list is not strictly monotone or leaves the unit square."""
    pass


class NonInvertibleBoundaryError(RealizationError):
    """Boundary has a flat stretch and no unique inverse."""
    pass


# Decision

class DecisionError(NPRegionError):
    """Invalid Bayes-error or ROC request."""
    pass


class NonNegativeSlopeError(DecisionError):
    """Conjugate requested at a nonnegative slope."""
    pass


class TargetOutsideRegionError(DecisionError):
    """ROC target lies outside the band between boundary and ignorance line."""
    pass


# Configuration

class ConfigError(NPRegionError):
    """Invalid configuration file, environment override or option value."""
    pass
