"""
Settings: clearlab_config.json next to main.py, then CLEARLAB_* environment overrides.
main.py calls load_dotenv() first, so a .env file can carry the overrides.
"""
import json
import os
import sys
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .ring_core.errors import ConfigError

REPO_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG_FILE = "clearlab_config.json"

_ENV_OVERRIDES = {
    "CLEARLAB_BUDGET": "budget",
    "CLEARLAB_BOUND": "bound",
    "CLEARLAB_LOG_DIR": "log_dir",
    "CLEARLAB_WORKERS": "workers",
}


class LabSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    # largest finite ring classified exhaustively
    budget: int = Field(default=4096, ge=1)
    # entry radius for searches in M2(Z)
    bound: int = Field(default=30, ge=0)
    log_dir: str = "logs"
    log_file: str | None = "clearlab_runs.jsonl"
    catalog_file: str = "default_catalog.txt"
    workers: int = Field(default=1, ge=1)

    def catalog_path(self, base_dir: Path | None = None) -> Path:
        """The catalog relative to the config file's directory, falling back to the repository root."""
        path = Path(self.catalog_file)
        if path.is_absolute():
            return path
        for root in (base_dir, REPO_ROOT):
            if root is not None and (root / path).exists():
                return root / path
        return (base_dir or REPO_ROOT) / path


def load_settings(config_file: str | os.PathLike | None = None, env=None) -> LabSettings:
    env = os.environ if env is None else env
    path = Path(config_file) if config_file else Path(DEFAULT_CONFIG_FILE)
    if not path.exists() and not config_file and (REPO_ROOT / DEFAULT_CONFIG_FILE).exists():
        path = REPO_ROOT / DEFAULT_CONFIG_FILE

    data = {}
    if path.exists():
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path} is not valid JSON: {e}")
        if not isinstance(data, dict):
            raise ConfigError(f"{path} must hold a JSON object, got {type(data).__name__}")
    else:
        print(f"Warning: config file '{path}' not found. Using built-in defaults.", file=sys.stderr)

    for variable, key in _ENV_OVERRIDES.items():
        if env.get(variable):
            data[key] = env[variable]

    try:
        return LabSettings.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"invalid settings from {path} and environment: {e}")
