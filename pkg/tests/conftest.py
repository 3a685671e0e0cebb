import numpy as np
import pytest

from cylcavity import CavityGeometry


@pytest.fixture
def unit_geom():
    """Unit-constant cavity used by most numerical checks."""
    return CavityGeometry(a=0.9, L=1.3, c=1.0, eps0=1.0, hbar=1.0)


@pytest.fixture
def si_geom():
    """Centimeter-scale cavity with the default SI constants."""
    return CavityGeometry(a=0.012, L=0.03)


@pytest.fixture
def rng():
    return np.random.default_rng(20260814)
