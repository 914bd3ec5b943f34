import pytest

from polarspec import enumerate_spectra_all


@pytest.fixture(scope="session")
def tables32():
    """Spectrum tables for N = 2, 4, 8, 16, 32 (one doubling run)."""
    return enumerate_spectra_all(5)


@pytest.fixture(scope="session")
def table32(tables32):
    return tables32[-1]


@pytest.fixture(scope="session")
def table16(tables32):
    return tables32[3]
