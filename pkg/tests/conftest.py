import pytest

from susy_pt import ModelParams, build_eigenfunction

FIXTURE_EPSILONS = (0.5, 1.0, 2.0)
FIXTURE_KS = (1.5, 2.0, 3.7, 10.0)
BATTERY = tuple(
    ModelParams(1.0, eps, k) for eps in FIXTURE_EPSILONS for k in FIXTURE_KS
)


@pytest.fixture(scope="session")
def build_cached():
    """Session-wide cache of normalized eigenfunctions; construction is
    pure so sharing across tests is safe."""
    cache = {}

    def get(params, n):
        key = (params, n)
        if key not in cache:
            cache[key] = build_eigenfunction(params, n)
        return cache[key]

    return get
