import pytest

from qtgl3.form import WordEngine


@pytest.fixture(scope="session")
def engine():
    """Shared rewriting engine; its memo tables are reused across tests."""
    return WordEngine()
