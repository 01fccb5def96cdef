"""Tests for pair construction, discretization and products."""

import math

import numpy as np
import pytest

from np_region.base import (
    BlowupLimitError,
    DeadItemError,
    DegenerateGridError,
    LengthMismatchError,
    NegativeMassError,
    NonFiniteMassError,
    NotNormalizedError,
    PairFormatError,
    UnsupportedFamilyError,
)
from np_region.distributions import (
    discretize_analytic,
    load_pair,
    lr_profile,
    make_categorical_pair,
    pair_from_dict,
    product_pair,
    swap_pair,
    tensor_power,
)
from np_region.models import AnalyticFamily, GridSpec


def test_make_pair_default_labels(reference_pair):
    """Labels default to x1, x2, ..."""
    assert reference_pair.labels == ('x1', 'x2', 'x3')
    assert reference_pair.size == 3


def test_make_pair_renormalizes_small_deviation():
    """Sums within 1e-9 of one are rescaled exactly."""
    pair = make_categorical_pair([0.5, 0.5 + 5e-10], [0.25, 0.75])
    assert math.fsum(pair.p) == pytest.approx(1.0, abs=1e-15)
    assert pair.p[0] < pair.p[1]


@pytest.mark.parametrize("p, q, error", [
    ([0.5, 0.5], [1.0], LengthMismatchError),
    ([], [], LengthMismatchError),
    ([1.5, -0.5], [0.5, 0.5], NegativeMassError),
    ([float('nan'), 1.0], [0.5, 0.5], NonFiniteMassError),
    ([0.5, 0.6], [0.5, 0.5], NotNormalizedError),
    ([1.0, 0.0], [1.0, 0.0], DeadItemError),
])
def test_make_pair_rejects_invalid_masses(p, q, error):
    """Each malformed input maps to its error."""
    with pytest.raises(error):
        make_categorical_pair(p, q)


def test_make_pair_label_count_mismatch():
    """Labels must match the support size."""
    with pytest.raises(LengthMismatchError):
        make_categorical_pair([0.5, 0.5], [0.5, 0.5], labels=['a'])


def test_swap_pair(reference_pair):
    """Swapping exchanges P and Q and keeps labels."""
    swapped = swap_pair(reference_pair)
    assert swapped.p == reference_pair.q
    assert swapped.q == reference_pair.p
    assert swapped.labels == reference_pair.labels


def test_pair_from_dict_and_file(sources_dir, reference_pair):
    """The bundled reference pair loads as R."""
    pair = load_pair(sources_dir / "reference_pair.json")
    assert pair.p == pytest.approx(reference_pair.p)
    assert pair.q == pytest.approx(reference_pair.q)
    assert pair_from_dict(pair.to_dict()) == pair


@pytest.mark.parametrize("data", [
    {'p': [1.0]},
    {'p': 1.0, 'q': 1.0},
    {'p': [1.0], 'q': [1.0], 'labels': 'x'},
    [1.0, 1.0],
])
def test_pair_from_dict_rejects_bad_schema(data):
    """Missing or mistyped keys raise PairFormatError."""
    with pytest.raises(PairFormatError):
        pair_from_dict(data)


def test_load_pair_invalid_json(tmp_path):
    """Malformed JSON is a format error."""
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding='utf-8')
    with pytest.raises(PairFormatError):
        load_pair(path)


def test_discretize_identical_gaussians():
    """Identical families give identical masses."""
    family = AnalyticFamily.parse("gaussian:0,1")
    pair = discretize_analytic(family, family, GridSpec(lower=-10.0, upper=10.0, nodes=512))
    assert pair.p == pair.q
    assert math.fsum(pair.p) == pytest.approx(1.0, abs=1e-12)


def test_discretize_reports_truncation():
    """The wider Gaussian loses more mass outside the window."""
    pair = discretize_analytic(
        AnalyticFamily.parse("gaussian:0,1"),
        AnalyticFamily.parse("gaussian:0,2"),
        GridSpec(lower=-10.0, upper=10.0, nodes=1024),
    )
    assert set(pair.metadata) == {'p_truncated', 'q_truncated', 'dropped_cells'}
    assert pair.metadata['q_truncated'] > pair.metadata['p_truncated']
    assert pair.metadata['q_truncated'] == pytest.approx(5.733e-7, rel=1e-3)


def test_discretize_drops_empty_cells():
    """Cells without mass under either family are removed and counted."""
    family = AnalyticFamily.parse("uniform:0,1")
    pair = discretize_analytic(family, family, GridSpec(lower=-1.0, upper=2.0, nodes=3))
    assert pair.size == 1
    assert pair.metadata['dropped_cells'] == 2.0


def test_discretize_midpoint_rule():
    """The midpoint rule matches CDF increments closely for smooth densities."""
    p_family = AnalyticFamily.parse("gaussian:0,1")
    q_family = AnalyticFamily.parse("gaussian:1,1")
    grid = GridSpec(lower=-10.0, upper=11.0, nodes=2048)
    exact = discretize_analytic(p_family, q_family, grid)
    midpoint = discretize_analytic(p_family, q_family, grid, rule='midpoint')
    assert np.max(np.abs(exact.p_array - midpoint.p_array)) < 1e-6


def test_discretize_errors():
    """Bad windows and families are rejected."""
    family = AnalyticFamily.parse("gaussian:0,1")
    with pytest.raises(DegenerateGridError):
        discretize_analytic(family, family, GridSpec(lower=1.0, upper=0.0, nodes=10))
    with pytest.raises(DegenerateGridError):
        discretize_analytic(family, family, GridSpec(lower=0.0, upper=1.0, nodes=1))
    with pytest.raises(UnsupportedFamilyError):
        discretize_analytic(AnalyticFamily.parse("cauchy:0,1"), family,
                            GridSpec(lower=-1.0, upper=1.0, nodes=10))
    with pytest.raises(UnsupportedFamilyError):
        discretize_analytic(AnalyticFamily.parse("gaussian:0,-1"), family,
                            GridSpec(lower=-1.0, upper=1.0, nodes=10))
    with pytest.raises(UnsupportedFamilyError):
        AnalyticFamily.parse("gaussian")


def test_analytic_family_spec_round_trip():
    """parse and spec are inverse."""
    family = AnalyticFamily.parse("Beta:1,0.5")
    assert family.kind == 'beta'
    assert family.spec == 'beta:1,0.5'


def test_tensor_power_size_and_masses(reference_pair):
    """Product masses are products of the factors."""
    square = tensor_power(reference_pair, 2)
    assert square.size == 9
    assert square.labels[0] == 'x1|x1'
    assert square.p[0] == pytest.approx(0.36)
    assert square.q[8] == pytest.approx(0.36)
    assert tensor_power(reference_pair, 1) is reference_pair


def test_product_pair_drops_null_items():
    """Tuples without mass under P and Q are removed."""
    separated = make_categorical_pair([1.0, 0.0], [0.0, 1.0])
    square = product_pair([separated, separated])
    assert square.size == 2
    assert set(square.labels) == {'x1|x1', 'x2|x2'}


def test_product_pair_blowup():
    """Supports above 10^6 items are refused."""
    pair = make_categorical_pair([0.1] * 10, [0.1] * 10)
    with pytest.raises(BlowupLimitError):
        tensor_power(pair, 7)


def test_lr_profile_order_and_ties(twin_pair):
    """Ratios descend and equal ratios merge."""
    profile = lr_profile(twin_pair)
    assert len(profile) == 3
    assert profile.ratios == pytest.approx([6.0, 1.0, 1.0 / 6.0])
    assert profile.q_masses == pytest.approx([0.1, 0.3, 0.6])


def test_lr_profile_infinite_ratio_first():
    """Items with q = 0 lead the profile."""
    pair = make_categorical_pair([0.2, 0.5, 0.3], [0.5, 0.0, 0.5])
    profile = lr_profile(pair)
    assert math.isinf(profile.ratios[0])
    assert profile.infinite_mass == pytest.approx(0.5)
