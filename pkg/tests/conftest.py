import pytest

from poissonflow import catalog


@pytest.fixture(scope="session")
def P1():
    return catalog.get("P1").payload


@pytest.fixture(scope="session")
def P2():
    return catalog.get("P2").payload


@pytest.fixture(scope="session")
def QP1():
    return catalog.get("QP1").payload


@pytest.fixture(scope="session")
def QP2():
    return catalog.get("QP2").payload


@pytest.fixture(scope="session")
def Y1():
    return catalog.get("Y1").payload


@pytest.fixture(scope="session")
def Y2():
    return catalog.get("Y2").payload


@pytest.fixture(scope="session")
def euler4():
    return catalog.get("euler").payload


@pytest.fixture(scope="session")
def gamma3():
    return catalog.get("tetrahedron").payload


@pytest.fixture(scope="session")
def gl2kk():
    return catalog.get("gl2kk").payload


@pytest.fixture(scope="session")
def nambu_quartic():
    return catalog.get("nambu-quartic").payload
