import pytest


@pytest.fixture
def isolated_env(tmp_path, monkeypatch):
    """Point settings at an empty config and a throwaway cache directory."""
    for name in ("EQQ_FORMAT", "EQQ_DEFAULT_SPACE", "EQQ_LOG_LEVEL", "EQQ_USE_CACHE", "EQQ_CACHE_CHECK_SEED"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("EQQ_CONFIG", str(tmp_path / "missing.conf"))
    monkeypatch.setenv("EQQ_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path
