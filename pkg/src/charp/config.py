"""Resource caps controlling how large a computation is allowed to grow.

All caps are carried in one immutable dataclass so concurrent callers can
use different budgets without shared state.  The defaults match the CLI
defaults; the CLI also reads CHARP_-prefixed environment variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import CharpError

DEFAULT_TERM_CAP = 1 << 26
DEFAULT_DIM_CAP = 1 << 24
DEFAULT_DENSE_THRESHOLD = 4096


@dataclass(frozen=True)
class Caps:
    """Resource budget: polynomial term cap, quotient dimension cap, and
    the matrix dimension up to which rank uses the dense strategy."""

    term_cap: int = DEFAULT_TERM_CAP
    dim_cap: int = DEFAULT_DIM_CAP
    dense_threshold: int = DEFAULT_DENSE_THRESHOLD

    def __post_init__(self):
        if self.term_cap <= 0 or self.dim_cap <= 0 or self.dense_threshold < 0:
            raise CharpError("caps must be positive")

    def with_overrides(self, **kwargs) -> "Caps":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_CAPS = Caps()

_ENV_FIELDS = {
    "CHARP_TERM_CAP": "term_cap",
    "CHARP_DIM_CAP": "dim_cap",
    "CHARP_DENSE_THRESHOLD": "dense_threshold",
}


def caps_from_env(base: Caps = DEFAULT_CAPS) -> Caps:
    """Apply CHARP_* environment overrides on top of ``base``."""
    overrides = {}
    for env_name, field in _ENV_FIELDS.items():
        raw = os.environ.get(env_name)
        if raw is None:
            continue
        try:
            overrides[field] = int(raw)
        except ValueError as exc:
            raise CharpError(f"{env_name} must be an integer, got {raw!r}") from exc
    return base.with_overrides(**overrides)
