import os

import dotenv
from dotmap import DotMap

dotenv.load_dotenv(override=False)

DEFAULTS = {
    "field_cap": ("NETCODE_FIELD_CAP", 256),
    "search_budget_bits": ("NETCODE_SEARCH_BUDGET_BITS", 24),
    "gl_search_cap": ("NETCODE_GL_SEARCH_CAP", 6),
    "tu_exhaustive_cap": ("NETCODE_TU_EXHAUSTIVE_CAP", 4),
    "basis_ground_cap": ("NETCODE_BASIS_GROUND_CAP", 20),
    "basis_count_cap": ("NETCODE_BASIS_COUNT_CAP", 50000),
    "lift_matroid_check_cap": ("NETCODE_LIFT_MATROID_CHECK_CAP", 20),
    "verbose": ("NETCODE_VERBOSE", 0),
}


def load_settings(overrides=None):
    """
    Read every tunable from the environment, falling back to DEFAULTS.

    >>> load_settings({"field_cap": 16}).field_cap
    16
    """
    settings = DotMap()
    for key, (env_name, default) in DEFAULTS.items():
        raw = os.getenv(env_name)
        settings[key] = default if raw is None else int(raw)
    for key, value in (overrides or {}).items():
        if key not in DEFAULTS:
            raise KeyError(f"unknown setting: {key}")
        settings[key] = value
    return settings


settings = load_settings()


def resolve(value, key):
    return settings[key] if value is None else value
