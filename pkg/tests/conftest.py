import pytest

from conjprob.symstats import StatsCache


@pytest.fixture(scope="session")
def cache():
    """Shared cache so the expensive exact tables are computed once."""
    return StatsCache()


@pytest.fixture(scope="session")
def kappa80(cache):
    """Exact kappa values for all n <= 80 (the full-scale table)."""
    cache.ensure_kappa(80)
    return cache


@pytest.fixture(scope="session")
def rho30(cache):
    """Exact rho values for all n <= 30."""
    for n in range(31):
        cache.rho(n)
    return cache
