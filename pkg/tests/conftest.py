from pathlib import Path

import pytest

from pylogharmonic import families
from pylogharmonic.logharmonic import construct_map

RANDOM_SEED = 20240917
RANDOM_COUNT = 50
REAL_RANDOM_COUNT = 20


@pytest.fixture
def rootpath():
    return Path(__file__).parents[1]


@pytest.fixture
def fixtures_path(rootpath):
    return rootpath / 'tests' / 'test_pylogharmonic' / 'fixtures'


@pytest.fixture(scope='session')
def example_1_map():
    return families.EXAMPLE_1.build()


@pytest.fixture(scope='session')
def example_2_map():
    return families.EXAMPLE_2.build()


@pytest.fixture(scope='session')
def random_pairs():
    return list(families.random_instances(RANDOM_SEED, RANDOM_COUNT))


@pytest.fixture(scope='session')
def random_maps(random_pairs):
    return [construct_map(phi, a) for phi, a in random_pairs]


@pytest.fixture(scope='session')
def random_real_maps():
    return [
        construct_map(phi, a) for phi, a in families.random_instances(
            RANDOM_SEED + 1, REAL_RANDOM_COUNT, real=True)
    ]
