"""Global size limits for exact powerset-scan operations."""

import os

# Hard cap: one machine word of bits per subset mask.
MAX_UNIVERSE = 64

# Operations that enumerate the powerset refuse universes above this size.
DEFAULT_SCAN_CAP = 16

SCAN_CAP_ENV = "ROUGHTOPO_MAX_UNIVERSE"


def scan_cap() -> int:
    """Current powerset-scan cap; the env var may lower it, never raise it."""
    raw = os.environ.get(SCAN_CAP_ENV)
    if raw is None:
        return DEFAULT_SCAN_CAP
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_SCAN_CAP
    if value < 0:
        return 0
    return min(value, DEFAULT_SCAN_CAP)
