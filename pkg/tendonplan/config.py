import os
from typing import Any, Dict, Mapping, Optional

import yaml
from pydantic import BaseModel, Field

from tendonplan.planner.ga import GaConfig
from tendonplan.utils.logging import LogFormat

ENV_PREFIX = "TENDONPLAN_"


class Settings(BaseModel):
    """
    Defaults shared by every CLI command.

    Attributes:
        seed (Optional[int]): Base seed for GA runs and bench repetitions.
        wear_file (str): Wear store locator (JSON path, sqlite path or SQLAlchemy URL).
        log_level (str): Level handed to ``configure_logging``.
        log_format (LogFormat): ``console`` or ``json`` log lines.
        log_file (Optional[str]): Log file; stderr when unset.
        runs (int): Bench repetitions per group.
        workers (int): Bench worker threads.
        ga (GaConfig): GA settings.
    """

    seed: Optional[int] = None
    wear_file: str = "wear.json"
    log_level: str = "warning"
    log_format: LogFormat = "console"
    log_file: Optional[str] = None
    runs: int = Field(default=100, ge=1)
    workers: int = Field(default=1, ge=1)
    ga: GaConfig = Field(default_factory=GaConfig)


def _read_yaml(path: str) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValueError(f"{path}: top level must be a mapping")
    return data


def load_settings(
    path: Optional[str] = None, environ: Mapping[str, str] = os.environ
) -> Settings:
    """Settings from an optional YAML file, overridden by ``TENDONPLAN_*`` variables."""
    data = _read_yaml(path) if path else {}
    for key in ("seed", "wear_file", "log_level", "log_format", "log_file"):
        value = environ.get(ENV_PREFIX + key.upper())
        if value:
            data[key] = value
    return Settings.model_validate(data)
