import os
import tomllib
from pathlib import Path
from typing import Any, Sequence

PROJECT_DIRECTORY = Path.home().joinpath(".disent/")


class Config:
    """User defaults from ``~/.disent/config.toml``.

    Keys are dotted paths into the TOML document (``defaults.samples``).
    A key missing from the file falls back to the environment variable
    ``DISENT_DEFAULTS_SAMPLES`` and so on.
    """

    CONFIG_LOCATION: Path = PROJECT_DIRECTORY.joinpath("config.toml")
    ENV_PREFIX = "DISENT_"

    _config: dict = {}
    _file_loaded: bool = False

    @classmethod
    def get(cls, key: str, default: Any = None) -> Any:
        key_components = key.split(".")

        if not cls._file_loaded:
            cls._config.update(cls._load_config_file())
            cls._file_loaded = True

        value = cls._get_inner_config(cls._config, key_components)
        if value is None:
            value = os.getenv(
                cls.ENV_PREFIX
                + "_".join(key_components).upper().replace("-", "_")
            )
        return default if value is None else value

    @classmethod
    def reset(cls):
        cls._config = {}
        cls._file_loaded = False

    @staticmethod
    def _get_inner_config(config: dict, key_components: Sequence[str]) -> Any:
        for key_component in key_components:
            if not isinstance(config, dict):
                return None
            config = config.get(key_component)
            if config is None:
                return None
        return config

    @classmethod
    def _load_config_file(cls) -> dict:
        if not cls.CONFIG_LOCATION.exists():
            return {}
        with open(cls.CONFIG_LOCATION, "rb") as f:
            return tomllib.load(f)
