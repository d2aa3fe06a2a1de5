import os

import pytest

from disent.config import Config
from disent.service.model import GaussianParams


@pytest.fixture
def example_params():
    return GaussianParams(2.0, 1.0)


@pytest.fixture
def isolated_user_config(tmp_path, monkeypatch):
    monkeypatch.setattr(
        Config, "CONFIG_LOCATION", tmp_path.joinpath("config.toml")
    )
    for name in list(os.environ):
        if name.startswith(Config.ENV_PREFIX):
            monkeypatch.delenv(name)
    Config.reset()
    yield
    Config.reset()
