import numpy as np
import pytest

from ptqm.two_level import TwoLevelParams


def random_valid_params(rng, margin=0.95):
    """Draw (r, s, theta) uniformly, rejected into the unbroken region."""
    while True:
        r = rng.uniform(-2.0, 2.0)
        s = rng.uniform(0.3, 2.0)
        theta = rng.uniform(-np.pi, np.pi)
        if abs(r * np.sin(theta) / s) < margin:
            return TwoLevelParams(r, s, theta)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
