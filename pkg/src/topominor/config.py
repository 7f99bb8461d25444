"""Resource bounds, overridable through environment variables.

``TOPOMINOR_MAX_NODES``       enumeration bound for rooted trees (default 10)
``TOPOMINOR_BRUTE_MAX``       largest host tree for the brute-force oracle (default 12)
``TOPOMINOR_TRUNCATION_CAP``  node cap for truncations of infinite trees (default 10000)
"""

import os

DEFAULT_MAX_NODES = 10
DEFAULT_BRUTE_MAX = 12
DEFAULT_TRUNCATION_CAP = 10_000


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def max_nodes():
    return _env_int("TOPOMINOR_MAX_NODES", DEFAULT_MAX_NODES)


def brute_max():
    return _env_int("TOPOMINOR_BRUTE_MAX", DEFAULT_BRUTE_MAX)


def truncation_cap():
    return _env_int("TOPOMINOR_TRUNCATION_CAP", DEFAULT_TRUNCATION_CAP)
