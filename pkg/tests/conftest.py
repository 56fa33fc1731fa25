from __future__ import annotations

import pytest

from foldstab.quiver import Automorphism, Quiver
from foldstab.reps import Catalog


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: end-to-end acceptance checks")


@pytest.fixture(scope="session")
def q_a1() -> Quiver:
    return Quiver.make([1], [])


@pytest.fixture(scope="session")
def q_a2() -> Quiver:
    return Quiver.make([1, 2], [("a", 1, 2)])


@pytest.fixture(scope="session")
def q_a3() -> Quiver:
    return Quiver.make([1, 2, 3], [("a", 2, 1), ("b", 2, 3)])


@pytest.fixture(scope="session")
def q_a5() -> Quiver:
    return Quiver.make(
        [1, 2, 3, 4, 5],
        [("p1", 1, 2), ("p2", 2, 3), ("p4", 4, 3), ("p5", 5, 4)],
    )


@pytest.fixture(scope="session")
def q_d4() -> Quiver:
    return Quiver.make([0, 1, 2, 3], [("c1", 0, 1), ("c2", 0, 2), ("c3", 0, 3)])


@pytest.fixture(scope="session")
def q_d5() -> Quiver:
    return Quiver.make(
        [1, 2, 3, 4, 5],
        [("a", 1, 3), ("b", 2, 3), ("c", 3, 4), ("d", 4, 5)],
    )


@pytest.fixture(scope="session")
def flip_a3(q_a3: Quiver) -> Automorphism:
    return Automorphism(q_a3, (3, 2, 1), ("b", "a"))


@pytest.fixture(scope="session")
def flip_a5(q_a5: Quiver) -> Automorphism:
    return Automorphism(q_a5, (5, 4, 3, 2, 1), ("p5", "p4", "p2", "p1"))


@pytest.fixture(scope="session")
def rot_d4(q_d4: Quiver) -> Automorphism:
    return Automorphism(q_d4, (0, 2, 3, 1), ("c2", "c3", "c1"))


@pytest.fixture(scope="session")
def swap_d4(q_d4: Quiver) -> Automorphism:
    return Automorphism(q_d4, (0, 1, 3, 2), ("c1", "c3", "c2"))


@pytest.fixture(scope="session")
def cat_a2(q_a2: Quiver) -> Catalog:
    return Catalog(q_a2)


@pytest.fixture(scope="session")
def cat_a3(q_a3: Quiver) -> Catalog:
    return Catalog(q_a3)


@pytest.fixture(scope="session")
def cat_a5(q_a5: Quiver) -> Catalog:
    return Catalog(q_a5)


@pytest.fixture(scope="session")
def cat_d4(q_d4: Quiver) -> Catalog:
    return Catalog(q_d4)


@pytest.fixture(scope="session")
def cat_d5(q_d5: Quiver) -> Catalog:
    return Catalog(q_d5)
