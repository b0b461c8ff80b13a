import pytest

from betaring import config
from betaring.config import Config


def test_max_degree_validation():
    Config(max_degree=7)
    with pytest.raises(ValueError):
        Config(max_degree=8)
    with pytest.raises(ValueError):
        Config(max_degree=0)
    with pytest.raises(ValueError):
        Config(gset_cap=0)


def test_override_restores(tmp_path):
    before = config.get_config()
    with config.override(gset_cap=5):
        assert config.get_config().gset_cap == 5
    assert config.get_config() == before


def test_env_var_selects_catalog_dir(monkeypatch, tmp_path):
    monkeypatch.setenv("BETARING_CATALOG_DIR", str(tmp_path))
    assert Config(catalog_dir=None).resolved_catalog_dir() == tmp_path
    assert Config(catalog_dir="/elsewhere").resolved_catalog_dir().name == "elsewhere"
