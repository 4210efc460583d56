import numpy as np
import pytest

from boostcap.quadrature import QuadratureConfig


@pytest.fixture(scope="session")
def cfg():
    """Verification-grade quadrature settings shared across the suite."""
    return QuadratureConfig(abs_tol=1e-12, rel_tol=1e-10, max_subdivisions=2000)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240229)
