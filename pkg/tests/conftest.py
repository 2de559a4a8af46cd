import sys
from pathlib import Path

import pytest

from engelgraph import (
    Permutation,
    alternating_group,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    symmetric_group,
)

sys.path.insert(0, str(Path(__file__).parent))  # make `oracles` importable

REPO_ROOT = Path(__file__).parent.parent


@pytest.fixture(scope="session")
def repo_root():
    return REPO_ROOT


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def a4():
    return alternating_group(4)


@pytest.fixture(scope="session")
def c6():
    return cyclic_group(6)


@pytest.fixture(scope="session")
def d12():
    return dihedral_group(12)


@pytest.fixture(scope="session")
def dic3():
    return dicyclic_group(12)


def elem(G, *cycles):
    """Index of the element given by cycles, e.g. elem(s3, (1, 2))."""
    return G.index(Permutation.from_cycles(cycles))
