"""Tests for generators, f-divergences and Chernoff coefficients."""

import math

import numpy as np
import pytest

from np_region.base import DivergenceError, ExponentOutOfRangeError, ParamOutOfRangeError
from np_region.distributions import make_categorical_pair, swap_pair, tensor_power
from np_region.divergences import (
    alpha_divergence,
    chernoff_coefficient,
    conjugate_generator,
    divergence_table,
    f_divergence,
    generator_value,
    generator_values,
    slope_at_infinity,
)
from np_region.models import FGenerator

RHO_HALF = 2 * math.sqrt(0.06) + 0.3

ALL_GENERATORS = [
    FGenerator(kind='tvd'),
    FGenerator(kind='kl'),
    FGenerator(kind='reverse_kl'),
    FGenerator(kind='hellinger2'),
    FGenerator(kind='chi2'),
    FGenerator(kind='alpha', q=0.3),
    FGenerator(kind='alpha', q=-0.5),
    FGenerator(kind='alpha', q=2.0),
    FGenerator(kind='hockey_stick', gamma=1.5),
]


def test_reference_divergences(reference_pair):
    """Known values on the reference pair."""
    table = divergence_table(reference_pair)
    assert table['tvd'] == pytest.approx(0.5, abs=1e-12)
    assert table['kl'] == pytest.approx(0.5 * math.log(6), abs=1e-12)
    assert table['reverse_kl'] == pytest.approx(0.5 * math.log(6), abs=1e-12)
    assert table['hellinger2'] == pytest.approx(1 - RHO_HALF, abs=1e-12)
    assert table['chi2'] == pytest.approx(2.5 + 0.25 / 0.6, abs=1e-12)
    assert table['chi2_reverse'] == pytest.approx(table['chi2'], abs=1e-12)
    assert table['hellinger_affinity'] == pytest.approx(0.789898, abs=1e-6)


def test_alpha_and_hockey_stick_values(reference_pair):
    """alpha(1/2) and the hockey stick at gamma = 2."""
    assert alpha_divergence(reference_pair, 0.5).value == pytest.approx(0.840408, abs=1e-6)
    hs = f_divergence(reference_pair, FGenerator(kind='hockey_stick', gamma=2.0))
    assert hs.value == pytest.approx(0.4, abs=1e-12)


def test_alpha_generator_matches_coefficient_form(reference_pair):
    """The generator sum and the Chernoff form agree inside (0, 1)."""
    for q in (0.2, 0.5, 0.9):
        by_sum = f_divergence(reference_pair, FGenerator(kind='alpha', q=q)).value
        assert by_sum == pytest.approx(alpha_divergence(reference_pair, q).value, abs=1e-12)


def test_alpha_limits_are_kl(reference_pair):
    """q = 0 and q = 1 give the two KL divergences, approached continuously."""
    kl = 0.5 * math.log(6)
    assert alpha_divergence(reference_pair, 0.0).value == pytest.approx(kl, abs=1e-12)
    assert alpha_divergence(reference_pair, 1.0).value == pytest.approx(kl, abs=1e-12)
    assert alpha_divergence(reference_pair, 1e-6).value == pytest.approx(kl, rel=1e-4)


def test_infinite_values_on_disjoint_mass():
    """Mass of P where q = 0 costs f'(inf) per unit."""
    pair = make_categorical_pair([0.5, 0.5], [1.0, 0.0])
    assert math.isinf(f_divergence(pair, FGenerator(kind='kl')).value)
    assert f_divergence(pair, FGenerator(kind='tvd')).value == pytest.approx(0.5)
    assert f_divergence(pair, FGenerator(kind='hockey_stick', gamma=1.0)).value == pytest.approx(0.5)


def test_divergences_nonnegative_and_zero_on_equal(pairs_200):
    """D_f >= 0 everywhere and D_f(P||P) = 0."""
    for pair in pairs_200:
        positive = [x for x in pair.p if x > 0]
        same = make_categorical_pair(positive, positive)
        for gen in ALL_GENERATORS:
            assert f_divergence(pair, gen).value >= 0.0
            assert f_divergence(same, gen).value == pytest.approx(0.0, abs=1e-12)


def test_data_processing_inequality(pairs_200):
    """Merging the first two items never increases a divergence."""
    for pair in pairs_200:
        p, q = list(pair.p), list(pair.q)
        merged = make_categorical_pair([p[0] + p[1]] + p[2:], [q[0] + q[1]] + q[2:])
        for gen in ALL_GENERATORS:
            before = f_divergence(pair, gen).value
            after = f_divergence(merged, gen).value
            assert after <= before + 1e-12


def test_conjugate_generator_reverses_divergence(pairs_200):
    """D_{f*}(Q||P) = D_f(P||Q)."""
    for gen in (FGenerator(kind='kl'), FGenerator(kind='hellinger2'),
                FGenerator(kind='tvd'), FGenerator(kind='alpha', q=0.3)):
        conj = conjugate_generator(gen)
        for pair in pairs_200:
            forward = f_divergence(pair, gen).value
            backward = f_divergence(swap_pair(pair), conj).value
            if math.isinf(forward):
                assert math.isinf(backward)
            else:
                assert backward == pytest.approx(forward, rel=1e-9, abs=1e-12)


def test_conjugate_generator_unknown():
    """Kinds without a tabulated conjugate are refused."""
    with pytest.raises(DivergenceError):
        conjugate_generator(FGenerator(kind='chi2'))


def test_chernoff_tensorizes(reference_pair):
    """rho_q of an n-fold product is rho_q^n."""
    for n in (2, 3, 4):
        power = tensor_power(reference_pair, n)
        assert chernoff_coefficient(power, 0.5) == pytest.approx(RHO_HALF ** n, rel=1e-12)
        assert chernoff_coefficient(power, 0.3) == pytest.approx(
            chernoff_coefficient(reference_pair, 0.3) ** n, rel=1e-12
        )


@pytest.mark.parametrize("q", [0.0, 1.0, -0.1, 1.5])
def test_chernoff_exponent_range(reference_pair, q):
    """Exponents outside (0, 1) are rejected."""
    with pytest.raises(ExponentOutOfRangeError):
        chernoff_coefficient(reference_pair, q)


def test_generator_values_match_scalar():
    """Vectorized and scalar evaluation agree on finite points."""
    t = np.array([0.0, 0.25, 1.0, 3.0, 10.0])
    for gen in ALL_GENERATORS + [FGenerator(kind='indicator', lower=0.5, upper=2.0)]:
        expected = [generator_value(gen, float(x)) for x in t]
        np.testing.assert_allclose(generator_values(gen, t), expected, rtol=1e-12, atol=1e-12)


def test_generator_edge_values():
    """Values at t = 0, t = 1 and t = inf."""
    for gen in ALL_GENERATORS:
        assert generator_value(gen, 1.0) == pytest.approx(0.0, abs=1e-15)
    assert generator_value(FGenerator(kind='alpha', q=0.3), 0.0) == pytest.approx(1 / 0.7)
    assert generator_value(FGenerator(kind='kl'), math.inf) == math.inf
    assert slope_at_infinity(FGenerator(kind='alpha', q=0.25)) == pytest.approx(4.0)
    assert slope_at_infinity(FGenerator(kind='alpha', q=-1.0)) == math.inf
    with pytest.raises(DivergenceError):
        generator_value(FGenerator(kind='kl'), -1.0)


@pytest.mark.parametrize("spec, kind", [
    ("tvd", 'tvd'), ("kl", 'kl'), ("rkl", 'reverse_kl'), ("h2", 'hellinger2'),
    ("alpha:0.5", 'alpha'), ("hs:2", 'hockey_stick'), ("chi2", 'chi2'), ("ind:0.5,3", 'indicator'),
])
def test_generator_spec_parsing(spec, kind):
    """Every spec form parses and prints back."""
    gen = FGenerator.parse(spec)
    assert gen.kind == kind
    assert gen.spec == spec


@pytest.mark.parametrize("spec", ["foo", "alpha", "alpha:1", "hs:-1", "ind:2,3", "kl:1", "alpha:x"])
def test_generator_spec_errors(spec):
    """Malformed generator specs raise ParamOutOfRangeError."""
    with pytest.raises(ParamOutOfRangeError):
        FGenerator.parse(spec)
