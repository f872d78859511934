import pytest

from logderiv import DivisorGerm, Ring, derlog


@pytest.fixture(scope="session")
def R3():
    return Ring(["x", "y", "z"])


@pytest.fixture(scope="session")
def R2():
    return Ring(["x", "y"])


@pytest.fixture(scope="session")
def whitney(R3):
    """The pinch-point surface x^2 - y^2 z with its full derivation module."""
    x, y, z = R3.gens()
    D = DivisorGerm(R3, x**2 - y**2 * z)
    return D, derlog(D)


@pytest.fixture(scope="session")
def quintic(R3):
    """The free arrangement-like quintic x*y*(x+y)*(x-y)*(y-x*z)."""
    x, y, z = R3.gens()
    D = DivisorGerm(R3, x * y * (x + y) * (x - y) * (y - x * z))
    return D, derlog(D)


@pytest.fixture(scope="session")
def cusp_line(R2):
    """The plane arrangement x*y*(x+y), free with a 2-element basis."""
    x, y = R2.gens()
    D = DivisorGerm(R2, x * y * (x + y))
    return D, derlog(D)


@pytest.fixture(scope="session")
def normal_crossings():
    R = Ring(["x1", "x2", "x3"])
    x1, x2, x3 = R.gens()
    D = DivisorGerm(R, x1 * x2 * x3)
    return D, derlog(D)
