"""Size limits shared by the library and the command line."""

from __future__ import annotations

import os

DEFAULT_MAX_N = 12
EXHAUSTIVE_MAX_N = 5
EXHAUSTIVE_HARD_MAX_N = 6


def max_n() -> int:
    """Largest ground set accepted by the constructors (``HYPERLAT_MAX_N`` overrides)."""
    raw = os.environ.get("HYPERLAT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"HYPERLAT_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("HYPERLAT_MAX_N must be positive")
    return value
