"""Configuration management for hlindex.

Handles loading and generating the TOML file that holds search bounds,
pipeline separation, the exact-engine size cap and verification limits.
"""

from __future__ import annotations

import os
import sys
import tomllib
from dataclasses import dataclass
from pathlib import Path

DEFAULT_CONFIG_PATH = "hlindex.toml"
CONFIG_ENV = "HLINDEX_CONFIG"
WORKERS_ENV = "HLINDEX_WORKERS"

DEFAULT_CONFIG_TEMPLATE = """\
# hlindex configuration
# Every key is optional; missing keys keep the defaults shown here.

[search]
radius = {search_radius}        # ball around each start vertex
max_size = {max_size}          # largest candidate set enumerated
budget = {budget}     # candidate sets per (vertex, side)

[pipeline]
separation = {separation}       # start vertices pairwise this far apart
workers = {workers}           # HLINDEX_WORKERS overrides

[spectra]
char_poly_max_n = {char_poly_max_n}   # exact characteristic polynomials up to this order

[verify]
nmax = {nmax}             # default exhaustive order for verify-theorem
nmax_limit = {nmax_limit}       # hard cap on exhaustive enumeration
"""


@dataclass
class HLIndexConfig:
    char_poly_max_n: int = 64
    search_radius: int = 17
    separation: int = 38
    max_size: int = 8
    budget: int = 10_000_000
    workers: int = 1
    nmax: int = 12
    nmax_limit: int = 14


# (section, key in file) -> dataclass field
_KEYS = {
    ("search", "radius"): "search_radius",
    ("search", "max_size"): "max_size",
    ("search", "budget"): "budget",
    ("pipeline", "separation"): "separation",
    ("pipeline", "workers"): "workers",
    ("spectra", "char_poly_max_n"): "char_poly_max_n",
    ("verify", "nmax"): "nmax",
    ("verify", "nmax_limit"): "nmax_limit",
}


def _env_workers(config: HLIndexConfig) -> HLIndexConfig:
    raw = os.environ.get(WORKERS_ENV, "")
    if raw:
        try:
            config.workers = max(1, int(raw))
        except ValueError:
            print(f"Warning: ignoring non-integer {WORKERS_ENV}={raw!r}", file=sys.stderr)
    return config


def load_config(config_path: str | None = None) -> HLIndexConfig:
    """Load configuration from a TOML file.

    The path is ``config_path``, else ``$HLINDEX_CONFIG``, else
    ``hlindex.toml``. Falls back to defaults if the file doesn't exist.
    Unknown keys are ignored.
    """
    explicit = config_path or os.environ.get(CONFIG_ENV, "")
    path = Path(explicit or DEFAULT_CONFIG_PATH)
    config = HLIndexConfig()
    if not path.exists():
        # the default path is optional; only a named file that is missing earns a warning
        if explicit:
            print(
                f"Warning: Config file '{path}' not found, using defaults. "
                f"Run 'hlindex init-config' to generate one.",
                file=sys.stderr,
            )
        return _env_workers(config)

    with open(path, "rb") as f:
        raw = tomllib.load(f)

    for (section, key), attr in _KEYS.items():
        value = raw.get(section, {}).get(key)
        if isinstance(value, int) and not isinstance(value, bool):
            setattr(config, attr, value)
    return _env_workers(config)


def generate_config(config_path: str = DEFAULT_CONFIG_PATH) -> str:
    """Write the commented default template; returns the path written."""
    defaults = HLIndexConfig()
    content = DEFAULT_CONFIG_TEMPLATE.format(
        search_radius=defaults.search_radius,
        max_size=defaults.max_size,
        budget=defaults.budget,
        separation=defaults.separation,
        workers=defaults.workers,
        char_poly_max_n=defaults.char_poly_max_n,
        nmax=defaults.nmax,
        nmax_limit=defaults.nmax_limit,
    )
    Path(config_path).write_text(content)
    return config_path
