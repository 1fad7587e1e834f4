from __future__ import annotations

import pytest

from plesken import from_structure_constants, plesken_algebra, preset
from plesken.verify import FixtureSet


@pytest.fixture(scope="session")
def heis3():
    return from_structure_constants(3, {(0, 1): [0, 0, 1]}, labels=("X", "Y", "Z"))


@pytest.fixture(scope="session")
def sl2():
    return from_structure_constants(
        3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]},
        labels=("h", "e", "f"))


@pytest.fixture(scope="session")
def abelian2():
    return from_structure_constants(2, {})


@pytest.fixture(scope="session")
def q8_algebra():
    algebra, _ = plesken_algebra(preset("quaternion8"))
    return algebra


@pytest.fixture(scope="session")
def fixture_set():
    # no order cap: includes the Heisenberg group of order 27
    return FixtureSet(max_group_order=None)
