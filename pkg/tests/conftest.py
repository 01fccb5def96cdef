"""Shared fixtures: the reference pair and seeded random pairs."""

from pathlib import Path
from typing import List

import numpy as np
import pytest

from np_region.distributions import make_categorical_pair
from np_region.models import CategoricalPair

SOURCES = Path(__file__).parent.parent / "sources" / "pairs"


def random_pairs(count: int, seed: int = 20240601, with_zeros: bool = True) -> List[CategoricalPair]:
    """Dirichlet pairs on 2..10 items; every fourth pair gets a zero entry in p or q."""
    rng = np.random.default_rng(seed)
    pairs = []
    for i in range(count):
        n = int(rng.integers(2, 11))
        p = rng.dirichlet(np.ones(n))
        q = rng.dirichlet(np.ones(n))
        if with_zeros and i % 4 == 3 and n > 2:
            j = int(rng.integers(n))
            if i % 8 == 3:
                p[j] = 0.0
            else:
                q[j] = 0.0
        pairs.append(make_categorical_pair((p / p.sum()).tolist(), (q / q.sum()).tolist()))
    return pairs


@pytest.fixture
def reference_pair() -> CategoricalPair:
    """P = (0.6, 0.3, 0.1), Q = (0.1, 0.3, 0.6)."""
    return make_categorical_pair([0.6, 0.3, 0.1], [0.1, 0.3, 0.6])


@pytest.fixture
def twin_pair() -> CategoricalPair:
    """Reference pair with its middle item split in two."""
    return make_categorical_pair([0.6, 0.15, 0.15, 0.1], [0.1, 0.15, 0.15, 0.6])


@pytest.fixture(scope="session")
def pairs_200() -> List[CategoricalPair]:
    """200 seeded random pairs."""
    return random_pairs(200)


@pytest.fixture(scope="session")
def pairs_40() -> List[CategoricalPair]:
    """40 seeded random pairs for checks that bisect at every alpha."""
    return random_pairs(40, seed=7)


@pytest.fixture
def sources_dir() -> Path:
    """Directory of the bundled reference inputs."""
    return SOURCES
