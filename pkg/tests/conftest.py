import numpy as np
import pytest

from nmrqc import run_experiment


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20250811)


def random_unitary(rng, dim=4):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture(scope="session")
def table_cache():
    """Benchmark tables computed once per session (propagators are cached
    inside the integrator, so repeated suites share the heavy work)."""
    cache = {}

    def get(name):
        if name not in cache:
            from nmrqc import canned_spec
            cache[name] = run_experiment(canned_spec(name))
        return cache[name]

    return get
