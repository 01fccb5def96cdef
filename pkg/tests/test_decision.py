"""Tests for Bayes error rates, conjugates and ROC mixing."""

import numpy as np
import pytest

from np_region.base import NonNegativeSlopeError, TargetOutsideRegionError
from np_region.boundary import IGNORANCE, eval_boundary, exact_boundary
from np_region.curves import lower_curve, upper_curve
from np_region.decision import (
    bayes_error,
    bayes_error_pair,
    ber_bounds,
    conjugate,
    rates_to_target,
    roc_mixing_weight,
    roc_points,
)
from np_region.divergences import chernoff_coefficient
from np_region.models import PriorPair

PRIORS = [PriorPair(pi_p=x) for x in (0.1, 0.3, 0.5, 0.8)]


def test_bayes_error_reference(reference_pair):
    """Equal priors tie between two vertices; the smaller alpha wins."""
    boundary = exact_boundary(reference_pair)
    ber, vertex = bayes_error(boundary, PriorPair(pi_p=0.5))
    assert ber == pytest.approx(0.25)
    assert vertex == pytest.approx((0.1, 0.4))

    ber, vertex = bayes_error(boundary, PriorPair(pi_p=0.9))
    assert ber == pytest.approx(0.1)
    assert vertex == (0.0, 1.0)


def test_bayes_error_matches_itemwise(pairs_200):
    """The boundary minimum equals the sum of itemwise minima."""
    for pair in pairs_200:
        boundary = exact_boundary(pair)
        for prior in PRIORS:
            ber, _ = bayes_error(boundary, prior)
            assert ber == pytest.approx(bayes_error_pair(pair, prior), abs=1e-12)


def test_conjugate_reference(reference_pair):
    """Slope -1 corresponds to equal priors."""
    bstar, pi_p, ber = conjugate(exact_boundary(reference_pair), -1.0)
    assert bstar == pytest.approx(-0.5)
    assert pi_p == pytest.approx(0.5)
    assert ber == pytest.approx(0.25)


def test_conjugate_agrees_with_bayes_error(pairs_200):
    """B*(z) / (z - 1) is the Bayes error at pi_p = z / (z - 1)."""
    for pair in pairs_200:
        boundary = exact_boundary(pair)
        for z in (-10.0, -2.0, -1.0, -0.5, -0.1):
            _, pi_p, ber = conjugate(boundary, z)
            prior = PriorPair(pi_p=pi_p)
            assert ber == pytest.approx(bayes_error(boundary, prior)[0], abs=1e-12)
            assert ber == pytest.approx(bayes_error_pair(pair, prior), abs=1e-12)


@pytest.mark.parametrize("z", [0.0, 0.5])
def test_conjugate_slope_must_be_negative(reference_pair, z):
    """Nonnegative slopes are refused."""
    with pytest.raises(NonNegativeSlopeError):
        conjugate(exact_boundary(reference_pair), z)


def test_ber_bounds_reference():
    """Hellinger and refined Chernoff curves at rho = 0.8 bracket the Bayes error."""
    lb, ub = ber_bounds(
        lower_curve('hellinger', 0.8),
        upper_curve('refined_chernoff', 0.5, 0.8),
        PriorPair(pi_p=0.5),
        grid=201,
    )
    assert lb == pytest.approx(0.2, abs=1e-9)
    assert ub == pytest.approx(0.4, abs=1e-9)


def test_ber_bounds_sandwich(pairs_40):
    """The interval from a pair's own coefficient contains its Bayes error."""
    for pair in pairs_40:
        rho = chernoff_coefficient(pair, 0.5)
        if rho == 0.0:
            continue
        boundary = exact_boundary(pair)
        for prior in (PriorPair(pi_p=0.5), PriorPair(pi_p=0.2)):
            lb, ub = ber_bounds(
                lower_curve('hellinger', rho),
                upper_curve('refined_chernoff', 0.5, rho),
                prior,
            )
            ber, _ = bayes_error(boundary, prior)
            assert lb <= ber + 1e-6
            assert ber <= ub + 1e-9


def test_roc_points(reference_pair):
    """ROC points are (alpha, 1 - beta)."""
    points = roc_points(exact_boundary(reference_pair))
    expected = [(0.0, 0.0), (0.1, 0.6), (0.4, 0.9), (1.0, 1.0)]
    for got, want in zip(points, expected):
        assert got == pytest.approx(want, abs=1e-12)


def test_rates_to_target():
    """fpr and tpr map to alpha and 1 - beta."""
    assert rates_to_target(0.25, 0.5) == (0.25, 0.5)
    with pytest.raises(TargetOutsideRegionError):
        rates_to_target(1.5, 0.5)


@pytest.mark.parametrize("g, weight", [(0.5, 0.5), (0.25, 1.0), (0.75, 0.0)])
def test_roc_mixing_weight(reference_pair, g, weight):
    """The weight reproduces the target operating point."""
    plan = roc_mixing_weight(exact_boundary(reference_pair), 0.25, g)
    assert plan.weight == pytest.approx(weight)
    assert plan.target == pytest.approx((0.25, g))


def test_roc_mixing_reaches_random_targets(pairs_200):
    """1000 random targets between boundary and ignorance are reproduced exactly."""
    rng = np.random.default_rng(11)
    for i in range(1000):
        boundary = exact_boundary(pairs_200[i % len(pairs_200)])
        t = float(1.0 - rng.random())
        low = float(eval_boundary(boundary, t))
        g = low + float(rng.random()) * (1.0 - t - low)
        plan = roc_mixing_weight(boundary, t, g)
        assert plan.target[0] == pytest.approx(t, abs=1e-12)
        assert plan.target[1] == pytest.approx(g, abs=1e-12)


def test_roc_mixing_on_ignorance():
    """Boundary and ignorance coincide: use the boundary test."""
    assert roc_mixing_weight(IGNORANCE, 0.3, 0.7).weight == 1.0


@pytest.mark.parametrize("t, g", [(0.25, 0.2), (0.25, 0.8), (0.0, 0.5), (1.2, 0.0)])
def test_roc_mixing_outside_band(reference_pair, t, g):
    """Targets outside the band between boundary and ignorance are refused."""
    with pytest.raises(TargetOutsideRegionError):
        roc_mixing_weight(exact_boundary(reference_pair), t, g)
