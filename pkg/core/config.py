import json
import logging
import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import config as app_config
from core.errors import SizeGuardError

logger = logging.getLogger(__name__)

CONFIG_PATH = os.path.join(os.path.expanduser("~"), ".patternhall_config.json")
SIZE_GUARD_ENV = "VINC_SIZE_GUARD"

_cached_config = None


def load_config():
    """Load configuration from JSON file (cached after the first read)"""
    global _cached_config
    if _cached_config is None:
        if os.path.exists(CONFIG_PATH):
            try:
                with open(CONFIG_PATH, "r") as f:
                    _cached_config = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                logger.warning(f"[CONFIG] Ignoring unreadable config {CONFIG_PATH}: {e}")
                _cached_config = {}
        else:
            _cached_config = {}
    return _cached_config


def reload_config():
    """Drop the cached config so the next access re-reads the file"""
    global _cached_config
    _cached_config = None
    return load_config()


def save_config(config):
    """Save configuration to JSON file"""
    global _cached_config
    with open(CONFIG_PATH, "w") as f:
        json.dump(config, f, indent=4, sort_keys=True)
    _cached_config = config


def get_size_guard(kind):
    """
    Get the size guard for one enumeration family
    Priority:
    1. VINC_SIZE_GUARD environment variable (applies to every family)
    2. User-configured value
    3. Default from config.py
    """
    if kind not in app_config.DEFAULT_SIZE_GUARDS:
        raise ValueError(f"Unknown size guard: {kind}")

    override = os.environ.get(SIZE_GUARD_ENV)
    if override:
        try:
            return int(override)
        except ValueError:
            logger.warning(f"[CONFIG] {SIZE_GUARD_ENV}={override!r} is not an integer, ignored")

    guards = load_config().get("size_guards", {})
    if kind in guards:
        return int(guards[kind])
    return app_config.DEFAULT_SIZE_GUARDS[kind]


def set_size_guard(kind, value):
    """Persist a size guard for one enumeration family"""
    if kind not in app_config.DEFAULT_SIZE_GUARDS:
        raise ValueError(f"Unknown size guard: {kind}")
    if int(value) < 0:
        raise ValueError(f"Size guard must be non-negative, got {value}")
    config = dict(load_config())
    guards = dict(config.get("size_guards", {}))
    guards[kind] = int(value)
    config["size_guards"] = guards
    save_config(config)


def check_size_guard(kind, size):
    """Raise SizeGuardError when `size` exceeds the guard for `kind`"""
    limit = get_size_guard(kind)
    if size > limit:
        raise SizeGuardError(kind, size, limit)


def get_enumeration_method():
    """Get the default enumeration method for superinfiltration and qsgen"""
    method = load_config().get("enumeration_method", app_config.DEFAULT_ENUMERATION_METHOD)
    if method not in ("brute", "interleave"):
        logger.warning(f"[CONFIG] Unknown enumeration_method {method!r}, using brute")
        return "brute"
    return method


def set_enumeration_method(method):
    if method not in ("brute", "interleave"):
        raise ValueError(f"Unknown enumeration method: {method}")
    config = dict(load_config())
    config["enumeration_method"] = method
    save_config(config)


def get_verify_defaults():
    """Seed and spot-check count used by `verify` when the caller gives none"""
    config = load_config()
    return {
        "seed": int(config.get("verify_seed", app_config.DEFAULT_VERIFY_SEED)),
        "spot_checks": int(config.get("spot_checks", app_config.DEFAULT_SPOT_CHECKS)),
    }


def get_server_address():
    config = load_config()
    return (
        config.get("server_host", app_config.DEFAULT_SERVER_HOST),
        int(config.get("server_port", app_config.DEFAULT_SERVER_PORT)),
    )
