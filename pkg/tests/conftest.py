import pytest
from hypothesis import HealthCheck, settings

import compoz as cz

settings.register_profile(
    "ci",
    max_examples=50,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


# The showcase instance over GF(3): f of degree 4, g of degree 3, one phi
# whose product cancels conjugates and one whose product does not, with the
# expected outputs frozen.
WORKED_F = "2,0,1,0,1"
WORKED_G = "1,2,0,1"
PHI_CC_ROWS = ((0, 2, 1), (1, 0, 0), (1, 0, 0), (0, 0, 0))
PHI_NO_CC_ROWS = ((0, 2, 1), (0, 0, 0), (1, 0, 0), (0, 0, 0))
PRODUCT_CC = "2,1,2,1,0,1,1,2,1,0,1,1,1"
FACTOR_NO_CC = "1,2,1,1,0,2,1"
A_ENTRIES = ((1, 0, 2, 0), (0, 0, 0, 2), (0, 0, 2, 0), (0, 1, 0, 0))
B_ENTRIES = ((1, 2, 1), (0, 1, 1), (0, 0, 1))
A2I_TIMES_C = ((0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0))


@pytest.fixture(scope="session")
def F2():
    return cz.prime_field(2)


@pytest.fixture(scope="session")
def F3():
    return cz.prime_field(3)


class WorkedExample:
    def __init__(self):
        F3 = cz.prime_field(3)
        self.base = F3
        self.f = cz.poly_from_text(F3, WORKED_F)
        self.g = cz.poly_from_text(F3, WORKED_G)
        self.phi_cc = cz.PhiPoly.build(F3, PHI_CC_ROWS)
        self.phi_no_cc = cz.PhiPoly.build(F3, PHI_NO_CC_ROWS)
        self.pair = cz.RootPair.build(self.f, self.g)
        self.product_cc = cz.poly_from_text(F3, PRODUCT_CC)
        self.factor_no_cc = cz.poly_from_text(F3, FACTOR_NO_CC)


@pytest.fixture(scope="session")
def worked():
    return WorkedExample()


class SmallExample:
    """The GF(2) instance: f = X^2+X+1, g = X^3+X+1, phi = X Y (Y + 1)."""

    def __init__(self):
        F2 = cz.prime_field(2)
        self.base = F2
        self.f = cz.poly_from_text(F2, "1,1,1")
        self.g = cz.poly_from_text(F2, "1,1,0,1")
        self.phi = cz.PhiPoly.build(F2, ((0, 0, 0), (0, 1, 1)))
        self.pair = cz.RootPair.build(self.f, self.g)


@pytest.fixture(scope="session")
def small():
    return SmallExample()
