import pytest

from betaring.config import Config, set_config


@pytest.fixture(scope="session", autouse=True)
def _session_config(tmp_path_factory):
    set_config(Config(catalog_dir=str(tmp_path_factory.mktemp("catalogs"))))
    yield
