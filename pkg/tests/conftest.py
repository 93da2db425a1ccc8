import pytest

from pdoring.algebra.derivation import Derivation
from pdoring.algebra.ring_factory import RingFactory
from pdoring.cli.session import Session
from pdoring.series.laurent_series import PrecisionPolicy, Series
from pdoring.verify.catalog import build_fixture


@pytest.fixture(scope="session")
def z4():
    return RingFactory.make_zn(4)


@pytest.fixture(scope="session")
def z8():
    return RingFactory.make_zn(8)


@pytest.fixture(scope="session")
def dual_fixture():
    """Z2[a]/(a^2) with d/da; elements 0, 1, a, 1+a are indices 0..3."""
    return build_fixture("dual_partial")


@pytest.fixture(scope="session")
def swap_fixture():
    """Z2+Z2^2 with b1 <-> b2; b1 is index 2 and b2 is index 4."""
    return build_fixture("trivext_swap")


@pytest.fixture(scope="session")
def tri_fixture():
    """T2(Z2) with the inner derivation by e12; e11, e12, e22 are indices 1, 2, 4."""
    return build_fixture("tri_inner")


@pytest.fixture
def dual_series(dual_fixture):
    ring, d = dual_fixture.ring, dual_fixture.derivation

    def make(*terms, floor=None, drop=24):
        return Series.from_terms(ring, d, terms, floor=floor, policy=PrecisionPolicy(drop))

    return make


@pytest.fixture
def session():
    return Session()


@pytest.fixture
def z4_zero(z4):
    return Derivation.zero(z4)


@pytest.fixture(scope="session")
def product_fixture():
    """Z4 x Z2[a]/(a^2) with 0 x d/da; (u, v) is index 4*u + v."""
    return build_fixture("z4_x_dual")
