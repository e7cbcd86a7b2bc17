import numpy as np
import pytest
from hypothesis import HealthCheck, settings

# property suites run at least 100 seeded cases each
settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def random_orthonormal(rng, m, n):
    Q, _ = np.linalg.qr(rng.standard_normal((m, n)))
    return Q


def random_spd(rng, m, cond=100.0):
    Q = random_orthonormal(rng, m, m)
    s = np.exp(rng.uniform(0, np.log(cond), size=m))
    return (Q * s) @ Q.T


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
