import pytest

from helpers import NON_STONE_P, UNARY_NON_STONE, NON_DISTRIBUTIVE, PARTITION, space


@pytest.fixture
def nstone():
    return space(NON_STONE_P)


@pytest.fixture
def ex_nd():
    return space(NON_DISTRIBUTIVE)


@pytest.fixture
def unary_cov():
    return space(UNARY_NON_STONE)


@pytest.fixture
def part():
    return space(PARTITION)


@pytest.fixture
def single():
    return space([[1, 2, 3, 4]])
