import pytest

from powersemi.numsgp import build_from_generators


@pytest.fixture
def N():
    return build_from_generators([1])


@pytest.fixture
def S23():
    return build_from_generators([2, 3])


@pytest.fixture
def S35():
    return build_from_generators([3, 5])
