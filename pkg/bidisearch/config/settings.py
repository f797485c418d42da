# bidisearch/config/settings.py
"""
Benchmark defaults, merged with a JSON settings file and BIDISEARCH_*
environment variables
"""

import json
import logging
import os

from bidisearch.exceptions import ConfigError

log = logging.getLogger(__name__)

ENV_PREFIX = "BIDISEARCH_"

DEFAULT_SETTINGS = {
    "memory_nodes": 200000,
    "tt_nodes": 100000,
    "perimeter_depth": 3,
    "first_phase_budget": None,
    "probe_iterations": 3,
    "timeout_secs": 60.0,
    "wall_skip_percent": 3.0,
    "maze_width": 50,
    "maze_height": 50,
    "puzzle_size": 3,
    "min_h": 0,
    "instances": 10,
    "seed": 1,
    "workers": 1,
    "baseline": None,
    "format": "csv",
}


def _coerce(key, raw):
    default = DEFAULT_SETTINGS.get(key)
    if raw.lower() in ("", "none", "null"):
        return None
    if isinstance(default, bool):
        return raw.lower() in ("1", "true", "yes", "on")
    if isinstance(default, int):
        return int(raw)
    if isinstance(default, float):
        return float(raw)
    if default is None:
        try:
            return int(raw)
        except ValueError:
            return raw
    return raw


def load_settings(path=None, environ=None):
    """Defaults, then the JSON file, then BIDISEARCH_<KEY> variables"""
    settings = dict(DEFAULT_SETTINGS)
    environ = os.environ if environ is None else environ
    path = path or environ.get(f"{ENV_PREFIX}CONFIG")

    if path:
        try:
            with open(path, encoding="utf-8") as handle:
                custom = json.load(handle)
        except json.JSONDecodeError as exc:
            log.warning("ignoring malformed settings file %s: %s", path, exc)
            custom = {}
        except OSError as exc:
            raise ConfigError(f"cannot read {path}: {exc.strerror or exc}") from exc
        if not isinstance(custom, dict):
            raise ConfigError(f"{path} must hold a JSON object, got {type(custom).__name__}")
        unknown = set(custom) - set(DEFAULT_SETTINGS)
        if unknown:
            log.warning("ignoring unknown settings in %s: %s", path, ", ".join(sorted(unknown)))
        settings.update({key: value for key, value in custom.items() if key in DEFAULT_SETTINGS})

    for key in DEFAULT_SETTINGS:
        raw = environ.get(f"{ENV_PREFIX}{key.upper()}")
        if raw is not None:
            try:
                settings[key] = _coerce(key, raw)
            except ValueError:
                log.warning("ignoring %s%s=%r: not a valid value", ENV_PREFIX, key.upper(), raw)

    if settings["first_phase_budget"] is None:
        settings["first_phase_budget"] = settings["memory_nodes"] // 2
    return settings
