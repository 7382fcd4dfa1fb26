import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

__all__ = [
    "CACHE_ENV",
    "DEFAULT_CACHE_DIR",
    "FORMATS",
    "RunConfig",
    "resolve_cache_dir",
]

CACHE_ENV = "HECKE_MOD_CACHE"
DEFAULT_CACHE_DIR = Path("~/.cache/heckemod")
FORMATS = ("text", "csv", "json")


@dataclass
class RunConfig:
    """
    Options shared by every heckemod subcommand

    Parameters
    ----------
    cache_dir: Path or None
               Directory of the persistent polynomial cache; None keeps
               the cache in memory only
    seed:      int
               64 bit seed of the equal-degree splitting
    jobs:      int
               Worker processes used to fill the cache
    fmt:       str
               "text", "csv" or "json"
    verbose:   int
               0 warnings only, 1 info, 2 or more debug
    """

    cache_dir: Optional[Path] = None
    seed: int = 0
    jobs: int = 1
    fmt: str = "text"
    verbose: int = 0

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError("Unknown output format {0}".format(self.fmt))
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")


def resolve_cache_dir(cli_value=None, no_cache=False, environ=None):
    """
    Cache directory for a run

    The environment variable HECKE_MOD_CACHE wins over --cache-dir, which
    wins over ~/.cache/heckemod. --no-cache returns None.
    """
    if no_cache:
        return None
    environ = os.environ if environ is None else environ
    if environ.get(CACHE_ENV):
        return Path(environ[CACHE_ENV]).expanduser()
    if cli_value:
        return Path(cli_value).expanduser()
    return DEFAULT_CACHE_DIR.expanduser()
