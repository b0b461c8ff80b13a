"""Runtime configuration: degree and size caps, catalog cache location."""

from __future__ import annotations

import math
import os
from contextlib import contextmanager
from dataclasses import dataclass, replace
from pathlib import Path

ENV_CATALOG_DIR = "BETARING_CATALOG_DIR"

MAX_SUPPORTED_DEGREE = 7


@dataclass(frozen=True)
class Config:
    """Caps and paths consulted by the computational modules.

    max_degree bounds the symmetric-group degree of any constructed class
    (7 is supported but expensive; 6 is the default desk scale).
    """

    max_degree: int = 6
    catalog_dir: str | None = None
    gset_cap: int = 20_000
    group_cap: int = math.factorial(10)
    long_running: bool = False

    def __post_init__(self):
        if not (1 <= self.max_degree <= MAX_SUPPORTED_DEGREE):
            raise ValueError(f"max_degree must be in 1..{MAX_SUPPORTED_DEGREE}")
        if self.gset_cap <= 0 or self.group_cap <= 0:
            raise ValueError("size caps must be positive")

    def resolved_catalog_dir(self) -> Path:
        if self.catalog_dir is not None:
            return Path(self.catalog_dir)
        env = os.environ.get(ENV_CATALOG_DIR)
        if env:
            return Path(env)
        return Path.home() / ".cache" / "betaring"


_config = Config()


def get_config() -> Config:
    return _config


def set_config(config: Config | None = None, **overrides) -> Config:
    """Replace the active config (or tweak fields of the current one)."""
    global _config
    _config = replace(config or _config, **overrides)
    return _config


@contextmanager
def override(**overrides):
    """Temporarily adjust config fields within a with-block."""
    global _config
    saved = _config
    _config = replace(_config, **overrides)
    try:
        yield _config
    finally:
        _config = saved
