import pytest

from matchbij import from_pairs


@pytest.fixture
def lp_example():
    # 7 edges, crossing block {1,2} x {4,5}, two gap-confined arcs.
    return from_pairs([(0, 9), (1, 6), (2, 3), (4, 13), (5, 10), (7, 8), (11, 12)], 7)


@pytest.fixture
def nc_example():
    # The noncrossing matching sharing lp_example's LR word.
    return from_pairs([(0, 13), (1, 10), (2, 3), (4, 9), (5, 6), (7, 8), (11, 12)], 7)


@pytest.fixture
def rep_example():
    # Class representative with 5 nestings and lp_example's LR word.
    return from_pairs([(0, 3), (1, 9), (2, 6), (4, 10), (5, 13), (7, 8), (11, 12)], 7)


@pytest.fixture
def nested4():
    # One outer edge over a nested pair and a singleton; 4 nestings.
    return from_pairs([(0, 7), (1, 2), (3, 6), (4, 5)], 4)


@pytest.fixture
def similar_a():
    # L & P; nesting-similar to similar_b.
    return from_pairs([(0, 6), (1, 2), (3, 5), (4, 7), (8, 9)], 5)


@pytest.fixture
def similar_b():
    # Not L & P; same LR word and nesting count as similar_a.
    return from_pairs([(0, 2), (1, 7), (3, 5), (4, 6), (8, 9)], 5)


@pytest.fixture
def hairpin():
    return from_pairs([(0, 2), (1, 3)], 2)


@pytest.fixture
def ladder4():
    return from_pairs([(0, 7), (1, 6), (2, 5), (3, 4)], 4)
