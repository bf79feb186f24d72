from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path

from dotenv import load_dotenv

from .errors import UsageError

load_dotenv(dotenv_path=".env")

log = logging.getLogger("eqquad.config")

OUTPUT_FORMATS = ("text", "json", "svg")
_FILE_KEYS = ("default_space", "output_format", "log_level", "cache_dir", "use_cache")


def _default_cache_dir() -> str:
    base = os.environ.get("XDG_CACHE_HOME") or str(Path.home() / ".cache")
    return str(Path(base) / "eqquad")


@dataclass(frozen=True)
class Settings:
    cache_dir: str
    config_path: str = "./eqquad.conf"
    default_space: str = "quadric:3"
    output_format: str = "text"
    log_level: str = "WARNING"
    use_cache: bool = True
    # seed for picking the cache entry re-verified on load
    cache_check_seed: int = 0


def _as_bool(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "yes", "on")


def read_config_file(path: str) -> dict[str, str]:
    """
    Parse a key=value config file.

    Args:
        path: Location of the file; a missing file yields no entries

    Returns:
        Mapping of recognised keys to raw string values
    """
    p = Path(path)
    if not p.is_file():
        return {}
    values: dict[str, str] = {}
    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        value = value.strip('"').strip("'")
        if key not in _FILE_KEYS:
            log.warning("ignoring unknown config key %r in %s", key, path)
            continue
        values[key] = value
    return values


def get_settings() -> Settings:
    config_path = os.environ.get("EQQ_CONFIG", "./eqquad.conf")
    file_values = read_config_file(config_path)

    def pick(env_name: str, key: str, default: str) -> str:
        return os.environ.get(env_name) or file_values.get(key) or default

    output_format = pick("EQQ_FORMAT", "output_format", "text")
    if output_format not in OUTPUT_FORMATS:
        raise UsageError(f"unknown output format {output_format!r}")

    return Settings(
        cache_dir=pick("EQQ_CACHE_DIR", "cache_dir", _default_cache_dir()),
        config_path=config_path,
        default_space=pick("EQQ_DEFAULT_SPACE", "default_space", "quadric:3"),
        output_format=output_format,
        log_level=pick("EQQ_LOG_LEVEL", "log_level", "WARNING").upper(),
        use_cache=_as_bool(pick("EQQ_USE_CACHE", "use_cache", "true")),
        cache_check_seed=int(os.environ.get("EQQ_CACHE_CHECK_SEED", "0")),
    )


def with_overrides(settings: Settings, **overrides: object) -> Settings:
    """Apply command-line overrides; ``None`` values leave a field untouched."""
    changes = {k: v for k, v in overrides.items() if v is not None}
    return replace(settings, **changes)
