import pytest

from invshadow import make_zoo_system


@pytest.fixture
def rotation8():
    return make_zoo_system("rotation", 8, 1)


@pytest.fixture
def rotation9():
    return make_zoo_system("rotation", 9, 1)


@pytest.fixture
def doubling9():
    return make_zoo_system("doubling", 9)


@pytest.fixture
def doubling8():
    return make_zoo_system("doubling", 8)


@pytest.fixture
def swap_pair():
    return make_zoo_system("swap_pair", 0.5)


@pytest.fixture
def two_fixed():
    return make_zoo_system("two_fixed_points", 1.0)


@pytest.fixture
def identity1():
    return make_zoo_system("identity", 1)


@pytest.fixture
def zoo(rotation8, rotation9, doubling9, swap_pair, two_fixed, identity1):
    return (rotation8, rotation9, doubling9, swap_pair, two_fixed, identity1)
