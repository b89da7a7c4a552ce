"""Environment-driven settings for horncone.

Explicit arguments win over CLI flags, which win over the environment,
which wins over the defaults below.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_CACHE_DIR = ".horncone-cache"

_TRUTHY = frozenset({"1", "true", "yes", "on"})


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in _TRUTHY


def default_jobs() -> int:
    """The machine parallelism, at least 1."""
    return os.cpu_count() or 1


def resolve_cache_dir(path: str | None = None) -> str:
    """Return an absolute cache directory.

    Uses ``path`` if given, then ``HORNCONE_CACHE``, then
    ``./.horncone-cache``.
    """
    chosen = path or os.environ.get("HORNCONE_CACHE") or DEFAULT_CACHE_DIR
    return os.path.abspath(os.path.expanduser(chosen))


@dataclass
class HornConfig:
    """Settings shared by the library entry points and the CLI.

    Attributes:
        cache_dir: Where Horn-triple tables are persisted.
        jobs: Worker threads for gate evaluation and sweeps.
        use_cache: Whether tables are read from and written to ``cache_dir``.
        debug: Turn on DEBUG logging in the CLI.
    """

    cache_dir: str = DEFAULT_CACHE_DIR
    jobs: int = 1
    use_cache: bool = True
    debug: bool = False

    def __post_init__(self) -> None:
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")

    @classmethod
    def from_env(cls) -> HornConfig:
        """Create a config from ``HORNCONE_*`` environment variables.

        Reads the following environment variables (all optional):

        - ``HORNCONE_CACHE`` (default ``./.horncone-cache``)
        - ``HORNCONE_JOBS`` (default: number of CPUs)
        - ``HORNCONE_NO_CACHE`` (``1`` disables persistence)
        - ``HORNCONE_DEBUG`` (``1`` enables DEBUG logging)

        Raises:
            ValueError: If ``HORNCONE_JOBS`` is not a positive integer.
        """
        raw_jobs = os.environ.get("HORNCONE_JOBS", "").strip()
        try:
            jobs = int(raw_jobs) if raw_jobs else default_jobs()
        except ValueError:
            raise ValueError(f"HORNCONE_JOBS must be an integer, got {raw_jobs!r}") from None
        return cls(
            cache_dir=resolve_cache_dir(),
            jobs=jobs,
            use_cache=not _env_flag("HORNCONE_NO_CACHE"),
            debug=_env_flag("HORNCONE_DEBUG"),
        )
