"""On-disk persistence for Horn-triple tables.

Each table is a JSON file ``horn-n{n}-r{r}.json`` in the cache directory.
Writes go to a temporary file in the same directory which is then moved
into place with :func:`os.replace`, so readers never see a partial file.
Unreadable or mismatched files are logged and treated as missing.
"""

from __future__ import annotations

import contextlib
import json
import logging
import os
import tempfile
from typing import TYPE_CHECKING

from .config import resolve_cache_dir

if TYPE_CHECKING:
    from .horn_classical import HornTripleTable

logger = logging.getLogger(__name__)

CACHE_FORMAT = 1


class TripleCache:
    """A directory of cached :class:`~horncone.horn_classical.HornTripleTable` files.

    Args:
        directory: Cache location.  Falls back to ``HORNCONE_CACHE`` and
            then ``./.horncone-cache``.  Created lazily on first write.
    """

    def __init__(self, directory: str | None = None) -> None:
        self.directory = resolve_cache_dir(directory)

    def path_for(self, n: int, r: int) -> str:
        return os.path.join(self.directory, f"horn-n{n}-r{r}.json")

    def load(self, n: int, r: int) -> HornTripleTable | None:
        """Return the cached table, or ``None`` if absent or unusable."""
        from .horn_classical import HornTripleTable

        path = self.path_for(n, r)
        if not os.path.isfile(path):
            logger.debug("Cache miss for n=%d r=%d", n, r)
            return None
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
            if data.get("format") != CACHE_FORMAT:
                raise ValueError(f"unsupported cache format {data.get('format')!r}")
            table = HornTripleTable.from_dict(data)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            logger.warning("Ignoring unreadable cache file %s: %s", path, exc)
            return None
        if (table.n, table.r) != (n, r):
            logger.warning("Ignoring cache file %s: it holds n=%d r=%d", path, table.n, table.r)
            return None
        logger.debug("Cache hit for n=%d r=%d (%d triples)", n, r, len(table))
        return table

    def store(self, table: HornTripleTable) -> str:
        """Atomically write ``table`` and return its path."""
        os.makedirs(self.directory, exist_ok=True)
        path = self.path_for(table.n, table.r)
        payload = {"format": CACHE_FORMAT, **table.to_dict()}
        fd, tmp_path = tempfile.mkstemp(
            prefix=f".horn-n{table.n}-r{table.r}-", suffix=".tmp", dir=self.directory
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(payload, f, sort_keys=True)
                f.write("\n")
            os.replace(tmp_path, path)
        except BaseException:
            with contextlib.suppress(OSError):
                os.unlink(tmp_path)
            raise
        logger.info("Cached %d triples for n=%d r=%d in %s", len(table), table.n, table.r, path)
        return path

    def clear(self) -> int:
        """Delete every cached table; return how many files were removed."""
        if not os.path.isdir(self.directory):
            return 0
        removed = 0
        for name in sorted(os.listdir(self.directory)):
            if name.startswith("horn-n") and name.endswith(".json"):
                with contextlib.suppress(OSError):
                    os.unlink(os.path.join(self.directory, name))
                    removed += 1
        return removed
