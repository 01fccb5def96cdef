"""Tests for realizing prescribed boundaries by distribution pairs."""

import numpy as np
import pytest

from np_region.base import (
    DegenerateGridError,
    NonConvexInputError,
    NonInvertibleBoundaryError,
    NonMonotoneInputError,
)
from np_region.boundary import boundaries_match, exact_boundary
from np_region.distributions import discretize_analytic, lr_profile, make_categorical_pair
from np_region.models import AnalyticFamily, GridSpec
from np_region.realization import (
    cdf_table_to_pair,
    realize_categorical,
    realize_unit_interval,
    verify_realization,
)


def _interior(boundary):
    """Vertices after the implied start (0, 1), without the final (1, 0)."""
    return [v for v in boundary.vertices if v not in ((0.0, 1.0), (1.0, 0.0))]


def test_realize_reference_vertices(reference_pair):
    """The reference vertices give back the reference pair."""
    pair = realize_categorical([(0.1, 0.4), (0.4, 0.1)])
    assert pair.p == pytest.approx(reference_pair.p, abs=1e-12)
    assert pair.q == pytest.approx(reference_pair.q, abs=1e-12)


def test_twin_realizes_to_minimal_pair(reference_pair, twin_pair):
    """A boundary determines the pair only up to splitting items."""
    pair = realize_categorical(_interior(exact_boundary(twin_pair)))
    assert pair.size == 3
    assert pair.p == pytest.approx(reference_pair.p, abs=1e-12)


def test_realize_random_boundaries(pairs_200):
    """Realizing an exact boundary reproduces it, with ratios equal to slope magnitudes."""
    for pair in pairs_200:
        boundary = exact_boundary(pair)
        interior = _interior(boundary)
        if not interior:
            continue
        realized = realize_categorical(interior)
        realized_boundary = exact_boundary(realized)
        assert boundaries_match(realized_boundary, boundary, tol=1e-10)

        finite = [-s for s in boundary.slopes if np.isfinite(s)]
        ratios = [r for r in lr_profile(realized).ratios if np.isfinite(r)]
        assert ratios == pytest.approx(finite, rel=1e-9, abs=1e-12)


def test_realize_vertical_first_segment():
    """A first vertex at alpha = 0 becomes an item with q = 0."""
    pair = realize_categorical([(0.0, 0.5), (0.5, 0.2)])
    assert pair.q[0] == 0.0
    assert pair.p[0] == pytest.approx(0.5)
    assert exact_boundary(pair).vertices[0] == pytest.approx((0.0, 0.5))


@pytest.mark.parametrize("vertices", [
    [(0.1, 0.5), (0.2, 0.45), (0.3, 0.1)],
    [(0.25, 0.75)],
])
def test_realize_rejects_nonconvex(vertices):
    """Concave turns and collinear vertices are refused."""
    with pytest.raises(NonConvexInputError):
        realize_categorical(vertices)


@pytest.mark.parametrize("vertices", [
    [(0.2, 0.5), (0.1, 0.3)],
    [(0.1, 1.0)],
    [(1.2, 0.1)],
    [(0.1, 0.5), (0.1, 0.3)],
    [],
])
def test_realize_rejects_nonmonotone(vertices):
    """Vertices must move right and down inside the unit square."""
    with pytest.raises(NonMonotoneInputError):
        realize_categorical(vertices)


def test_secant_approximation_of_square():
    """64 vertices on (1 - alpha)^2 stay within 2e-3 of the curve."""
    alphas = np.arange(1, 64) / 64.0
    pair = realize_categorical([(float(a), float((1 - a) ** 2)) for a in alphas])
    assert verify_realization(pair, lambda a: (1.0 - a) ** 2) <= 2e-3


def test_realize_unit_interval_square():
    """B(alpha) = (1 - alpha)^2 gives F(x) = 1 - sqrt(1 - x)."""
    table = realize_unit_interval(lambda a: (1.0 - a) ** 2, knots=1001)
    expected = 1.0 - np.sqrt(1.0 - table.x)
    np.testing.assert_allclose(table.f, expected, atol=1e-10)
    assert table.is_convex()
    assert table(0.75) == pytest.approx(0.5, abs=1e-6)


def test_realize_unit_interval_polyline(reference_pair):
    """A polyline boundary round-trips through its CDF table."""
    boundary = exact_boundary(reference_pair)
    table = realize_unit_interval(boundary, knots=1001)
    assert table.is_convex()
    pair = cdf_table_to_pair(table)
    assert verify_realization(pair, boundary) <= 1e-6


def test_uniform_against_beta_realizes_square():
    """Discretized uniform vs beta(1, 1/2) has boundary close to (1 - alpha)^2."""
    pair = discretize_analytic(
        AnalyticFamily.parse("uniform:0,1"),
        AnalyticFamily.parse("beta:1,0.5"),
        GridSpec(lower=0.0, upper=1.0, nodes=4096),
    )
    assert verify_realization(pair, lambda a: (1.0 - a) ** 2) <= 2e-3


def test_cdf_rule_is_default_and_tighter_at_a_pole():
    """CDF increments are the default and beat the midpoint rule near Beta(1, 1/2)'s pole."""
    families = (AnalyticFamily.parse("uniform:0,1"), AnalyticFamily.parse("beta:1,0.5"))
    grid = GridSpec(lower=0.0, upper=1.0, nodes=4096)
    default = discretize_analytic(*families, grid)
    assert default == discretize_analytic(*families, grid, rule='cdf')
    midpoint = discretize_analytic(*families, grid, rule='midpoint')

    def square(a):
        return (1.0 - a) ** 2

    assert verify_realization(default, square) < verify_realization(midpoint, square)


@pytest.mark.parametrize("boundary", [
    lambda a: max(0.5 - a, 0.0),
    lambda a: 1.0 - 0.5 * a,
])
def test_realize_unit_interval_not_invertible(boundary):
    """Flat stretches and a nonzero end value have no inverse."""
    with pytest.raises(NonInvertibleBoundaryError):
        realize_unit_interval(boundary)


def test_realize_unit_interval_flat_polyline():
    """A polyline with a flat last segment is refused."""
    boundary = exact_boundary(make_categorical_pair([0.5, 0.5, 0.0], [0.2, 0.4, 0.4]))
    with pytest.raises(NonInvertibleBoundaryError):
        realize_unit_interval(boundary)


@pytest.mark.parametrize("boundary", [
    lambda a: 1.0 - a * a,
    lambda a: (1.0 - a) ** 0.5,
])
def test_realize_unit_interval_rejects_concave(boundary):
    """Strictly decreasing but concave curves have no convex CDF."""
    with pytest.raises(NonConvexInputError):
        realize_unit_interval(boundary, knots=101)


def test_realize_unit_interval_straight_line():
    """The line of ignorance gives the uniform CDF."""
    table = realize_unit_interval(lambda a: 1.0 - a, knots=101)
    np.testing.assert_allclose(table.f, table.x, atol=1e-11)


def test_realize_unit_interval_knots():
    """At least two knots are needed."""
    with pytest.raises(DegenerateGridError):
        realize_unit_interval(lambda a: 1.0 - a, knots=1)
