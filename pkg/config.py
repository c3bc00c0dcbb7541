"""
config.py
Goal: Resolve the sweep configuration from CLI flags, HIPPCHEN_* environment variables and .env.

Precedence: explicit flag > environment (.env included) > built-in default.

Last Updated: 2026-10-17
"""

# Import statements
import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from generators import GeneratorSpec
from path_engine import DEFAULT_BUDGET

logger = logging.getLogger(__name__)

ENV_PREFIX = "HIPPCHEN_"
FORMATS = ("jsonl", "csv", "summary")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
_TRUE = ("1", "true", "yes", "on")
_FALSE = ("0", "false", "no", "off", "")


class ConfigError(ValueError):
    """Invalid flag or environment value."""


# -------------- Part 1: Sweep configuration -------------- #

@dataclass
class SweepConfig:
    input: Optional[str] = None
    generator: Optional[GeneratorSpec] = None
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    fmt: str = "jsonl"
    only_fails: bool = False
    seed: int = 0
    log_level: str = "INFO"

    def validate(self) -> "SweepConfig":
        if self.budget < 1:
            raise ConfigError(f"budget must be at least 1, got {self.budget}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(f"log level must be one of {LOG_LEVELS}, got {self.log_level!r}")
        if self.input is not None and self.generator is not None:
            raise ConfigError("give either an input file or a generator family, not both")
        if self.generator is not None:
            try:
                self.generator.validate()
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
        return self


# -------------- Part 2: Environment -------------- #

def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw.strip())
    except ValueError:
        raise ConfigError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


def _env_bool(name: str) -> Optional[bool]:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None:
        return None
    value = raw.strip().lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    raise ConfigError(f"{ENV_PREFIX}{name} must be a boolean (1/0, true/false, yes/no), got {raw!r}")


def load_settings(dotenv_path: str = ".env") -> Dict[str, Any]:
    """
    Typed overrides read from HIPPCHEN_* variables after loading `dotenv_path`.
    Only variables that are set appear in the result.
    """
    load_dotenv(dotenv_path, override=True)
    settings: Dict[str, Any] = {}

    raw_input = os.getenv(ENV_PREFIX + "INPUT")
    if raw_input:
        settings["input"] = raw_input
    raw_format = os.getenv(ENV_PREFIX + "FORMAT")
    if raw_format:
        settings["fmt"] = raw_format.strip().lower()
    raw_level = os.getenv(ENV_PREFIX + "LOG_LEVEL")
    if raw_level:
        settings["log_level"] = raw_level.strip().upper()

    for name, key in (("BUDGET", "budget"), ("WORKERS", "workers"), ("SEED", "seed")):
        value = _env_int(name)
        if value is not None:
            settings[key] = value
    only_fails = _env_bool("ONLY_FAILS")
    if only_fails is not None:
        settings["only_fails"] = only_fails

    if settings:
        logger.debug(f"Environment overrides: {sorted(settings)}")
    return settings


def resolve_config(flags: Dict[str, Any], settings: Optional[Dict[str, Any]] = None) -> SweepConfig:
    """
    Merge flags over settings over defaults. A flag counts as given when it is not None.
    A generator spec in the flags takes the place of an environment input file.
    """
    if settings is None:
        settings = load_settings()
    merged: Dict[str, Any] = dict(settings)
    merged.update({key: value for key, value in flags.items() if value is not None})
    if merged.get("generator") is not None and flags.get("input") is None:
        merged.pop("input", None)

    known = {f.name for f in fields(SweepConfig)}
    unknown = sorted(set(merged) - known)
    if unknown:
        raise ConfigError(f"unknown settings: {unknown}")
    config = SweepConfig(**merged)
    if config.generator is not None and "seed" in merged:
        config.generator = replace(config.generator, seed=config.seed)
    return config.validate()
