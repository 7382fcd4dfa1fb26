import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long exact computations, deselect with -m 'not slow'"
    )


@pytest.fixture
def tmp_cache(tmp_path, monkeypatch):
    """A fresh persistent cache directory selected through HECKE_MOD_CACHE"""
    directory = tmp_path / "cache"
    monkeypatch.setenv("HECKE_MOD_CACHE", str(directory))
    return directory


@pytest.fixture
def no_cache_env(monkeypatch):
    monkeypatch.delenv("HECKE_MOD_CACHE", raising=False)
