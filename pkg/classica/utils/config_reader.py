import json
import os
from pathlib import Path
from typing import Any, Optional

from classica.utils.classica_logger import classica_logger

REPO_ROOT = Path(__file__).resolve().parent.parent.parent
DEFAULT_CONFIG_PATH = REPO_ROOT / "configs" / "classica_config.json"


class _ConfigReaderSingleton:
    _instance: Optional['_ConfigReaderSingleton'] = None
    _config_json: dict = {}
    _config_path: Path = DEFAULT_CONFIG_PATH

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_ConfigReaderSingleton, cls).__new__(cls)
            cls._instance._initialize_config()
        return cls._instance

    def _initialize_config(self, path: str | Path | None = None) -> None:
        if path is None:
            path = os.environ.get("CLASSICA_CONFIG") or DEFAULT_CONFIG_PATH
        self._config_path = Path(path)
        try:
            with open(self._config_path, 'r', encoding='utf-8') as file:
                self._config_json = json.load(file)
        except FileNotFoundError:
            classica_logger.error(f"CONFIG Configuration file {self._config_path} not found, using empty configuration")
            self._config_json = {}
            return

        logging_config = self._config_json.get("logging", {})
        if "level" in logging_config:
            classica_logger.set_level(logging_config["level"])
        if "quiet_prefixes" in logging_config:
            classica_logger.set_quiet_prefixes(logging_config["quiet_prefixes"])

    def reload_config(self, path: str | Path | None = None) -> None:
        self._initialize_config(path)

    def get_section(self, name: str) -> dict:
        section = self._config_json.get(name)
        if section is None:
            classica_logger.warning(f"CONFIG Section '{name}' missing from {self._config_path}, using built-in defaults")
            return {}
        return section

    def get(self, section: str, key: str, default: Any = None) -> Any:
        return self._config_json.get(section, {}).get(key, default)

    def resolve_path(self, path: str | Path | None) -> Path | None:
        """Resolve a config-relative path against the repository root."""
        if path is None:
            return None
        path = Path(path)
        if path.is_absolute():
            return path
        return REPO_ROOT / path

    def models_dir(self) -> Path | None:
        models = os.environ.get("CLASSICA_MODELS")
        if not models:
            return None
        return Path(models)


config_reader = _ConfigReaderSingleton()
