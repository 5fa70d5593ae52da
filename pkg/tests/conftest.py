import pytest

from menon_subsets import build_sieve


@pytest.fixture(scope="session")
def sieve():
    return build_sieve(1200)


@pytest.fixture(scope="session")
def small_sieve():
    return build_sieve(64)
