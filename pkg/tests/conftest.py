import pytest

from constrank import cartan


@pytest.fixture(scope="session")
def A1():
    return cartan.build_root_system("A1")


@pytest.fixture(scope="session")
def A2():
    return cartan.build_root_system("A2")


@pytest.fixture(scope="session")
def B2():
    return cartan.build_root_system("B2")


@pytest.fixture(scope="session")
def G2():
    return cartan.build_root_system("G2")
