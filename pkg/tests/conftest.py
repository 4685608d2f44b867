import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from dickeprobe.distributions import Statistics
from dickeprobe.lattice import LatticeSpec
from dickeprobe.oracle import FockBasis

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def spec2():
    return LatticeSpec(L=2, J=1.0, U=0.0)


@pytest.fixture(scope="session")
def spec100():
    return LatticeSpec(L=100, J=1.0, U=0.0)


@pytest.fixture(scope="session")
def bose_basis(spec2):
    return FockBasis(spec2, Statistics.BOSE, spec2.sites)


@pytest.fixture(scope="session")
def fermi_basis(spec2):
    return FockBasis(spec2, Statistics.FERMI, spec2.sites)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(240511)
