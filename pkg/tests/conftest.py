from __future__ import annotations

import pytest
from hypothesis import settings

import weylenum as we
from weylenum import kernels

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session", autouse=True)
def _warm():
    # jit compilation must not land inside a timed or deadline-checked body
    kernels.warmup()


@pytest.fixture(scope="session")
def d4():
    return we.root_system("D4")


@pytest.fixture(scope="session")
def d4_levels(d4):
    return list(we.generate_group(d4))


@pytest.fixture(scope="session")
def d4_index(d4_levels):
    return we.build_index(d4_levels)


@pytest.fixture(scope="session")
def d4_classes(d4_levels, d4_index):
    return we.conjugacy_classes(d4_levels, d4_index)


@pytest.fixture(scope="session")
def b3_levels():
    return list(we.generate_group(we.root_system("B3")))


@pytest.fixture(scope="session")
def a3_levels():
    return list(we.generate_group(we.root_system("A3")))
