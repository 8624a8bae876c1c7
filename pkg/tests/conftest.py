import pytest

from trivalent import validate


@pytest.fixture
def torus():
    """Two-face map on the torus: one T-orbit through all six edges."""
    return validate(6, (2, 3, 1, 5, 6, 4), (4, 5, 6, 1, 2, 3))


@pytest.fixture
def sphere():
    """Two-face map on the sphere: three T-orbits of two edges each."""
    return validate(6, (2, 3, 1, 5, 6, 4), (4, 6, 5, 1, 3, 2))
