import pytest

from sextic.geometry import hex_geometry


@pytest.fixture(scope="session")
def geom():
    return hex_geometry()


@pytest.fixture(scope="session")
def K(geom):
    return geom.K


@pytest.fixture(scope="session")
def L(geom):
    return geom.L
