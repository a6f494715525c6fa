import pytest

from trikoszul.monomials import parse_ideal

EX31 = "x^3, x^2*y, y^3, z^3, x^2*z^2"
EX42 = "x^5, y^5, z^5, y^3*z^3, x*y^4*z^2, x*y^2*z^4"
M2 = "x^2, x*y, x*z, y^2, y*z, z^2"
CI2 = "x^2, y^2, z^2"
STAIRCASE5 = "x^3, y^3, z^3, y*z^2, y^2*z"


@pytest.fixture
def ex31():
    return parse_ideal(EX31)


@pytest.fixture
def ex42():
    return parse_ideal(EX42)


@pytest.fixture
def msquare():
    return parse_ideal(M2)


@pytest.fixture
def ci2():
    return parse_ideal(CI2)


@pytest.fixture
def staircase5():
    return parse_ideal(STAIRCASE5)
