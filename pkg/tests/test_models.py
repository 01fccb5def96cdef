"""Tests for the Pydantic value types."""

import math

import pytest
from pydantic import ValidationError

from np_region.models import (
    CategoricalPair,
    CdfTable,
    DivergenceValue,
    Line,
    PiecewiseLinearBoundary,
    PriorPair,
)


def test_pair_model_is_frozen(reference_pair):
    """Pairs cannot be mutated."""
    with pytest.raises(ValidationError):
        reference_pair.p = (0.5, 0.5)


def test_pair_model_rejects_dead_items():
    """Direct construction enforces the same invariants."""
    with pytest.raises(ValidationError):
        CategoricalPair(labels=('a', 'b'), p=(1.0, 0.0), q=(1.0, 0.0))


@pytest.mark.parametrize("vertices", [
    ((0.1, 1.0), (1.0, 0.0)),
    ((0.0, 1.0), (0.5, 0.6), (1.0, 0.0)),
    ((0.0, 1.0), (0.5, 0.2), (0.5, 0.1), (1.0, 0.0)),
    ((0.0, 1.0), (1.0, 0.1)),
])
def test_boundary_model_shape(vertices):
    """Endpoints, strict alpha order and convexity are enforced."""
    with pytest.raises(ValidationError):
        PiecewiseLinearBoundary(vertices=vertices)


def test_boundary_model_properties():
    """Slopes and the ignorance flag."""
    boundary = PiecewiseLinearBoundary(vertices=((0.0, 1.0), (1.0, 0.0)))
    assert boundary.is_ignorance
    assert boundary.slopes.tolist() == [-1.0]
    assert boundary.to_dict() == {'vertices': [[0.0, 1.0], [1.0, 0.0]]}


def test_cdf_table_checks():
    """A table must be a CDF pinned at both ends."""
    table = CdfTable(knots=(0.0, 0.5, 1.0), values=(0.0, 0.25, 1.0))
    assert table.is_convex()
    assert float(table(0.75)) == pytest.approx(0.625)
    with pytest.raises(ValidationError):
        CdfTable(knots=(0.0, 1.0), values=(0.0, 0.9))


def test_cdf_table_must_be_convex():
    """A concave table is rejected at construction."""
    with pytest.raises(ValidationError, match="convex"):
        CdfTable(knots=(0.0, 0.5, 1.0), values=(0.0, 0.75, 1.0))
    assert CdfTable(knots=(0.0, 0.5, 1.0), values=(0.0, 0.5, 1.0)).is_convex()


def test_line_model():
    """Slope, ordinate and residual of a line."""
    line = Line(a=2.0, b=1.0, c=0.6, orientation='lower')
    assert line.slope == -2.0
    assert line.beta_at(0.1) == pytest.approx(0.4)
    assert line.residual(0.1, 0.5) == pytest.approx(0.1)
    assert Line(a=1.0, b=0.0, c=0.5, orientation='upper').slope == -math.inf
    with pytest.raises(ValidationError):
        Line(a=0.0, b=0.0, c=1.0, orientation='lower')


def test_prior_pair_range():
    """Priors lie strictly between 0 and 1."""
    assert PriorPair(pi_p=0.25).pi_q == 0.75
    with pytest.raises(ValidationError):
        PriorPair(pi_p=1.0)


def test_divergence_value():
    """Values are nonnegative and may be infinite."""
    assert not DivergenceValue(value=math.inf).finite
    assert float(DivergenceValue(value=0.5)) == 0.5
    with pytest.raises(ValidationError):
        DivergenceValue(value=-1.0)
