import pytest

from cyclojones import QSymbolCache


@pytest.fixture(scope="session")
def cache():
    """Shared symbol cache; correctness never depends on hits."""
    return QSymbolCache()
