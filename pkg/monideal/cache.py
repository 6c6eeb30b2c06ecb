"""
Memoized powers of monomial ideals.

:class:`PowerCache` keeps ``I^s`` per ``(fingerprint, s)`` so that colon
pattern scans, Ass scans and the CLI never recompute a power twice. It can
optionally persist powers to a directory as JSON ideal documents, one file
per power, which later runs (or other processes) pick up again.

Examples
--------
>>> from monideal.base import Ring, MonomialIdeal
>>> from monideal.cache import PowerCache
>>> cache = PowerCache()
>>> I = MonomialIdeal.from_exponents(Ring(("x", "y")), [[2, 0], [1, 1]])
>>> cache.power(I, 4) == cache.power(I, 4)
True
>>> len(cache)
3
"""

import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from .base import MonomialIdeal, product
from .errors import SchemaError

logger = logging.getLogger(__name__)


class PowerCache:
    """Thread-safe memo of ideal powers with optional on-disk persistence.

    Parameters
    ----------
    directory : str or Path, optional
        Where to persist computed powers. Nothing is written when None.

    Notes
    -----
    The lock is held across lookups and inserts only; products run outside
    it. Two threads racing on the same key compute the same canonical value,
    and the first insert wins, so a key always maps to one value.
    """

    def __init__(self, directory: Optional[Union[str, Path]] = None):
        self.directory = Path(directory) if directory is not None else None
        self._powers: Dict[Tuple[str, int], MonomialIdeal] = {}
        self._lock = threading.Lock()
        if self.directory is not None:
            self.directory.mkdir(parents=True, exist_ok=True)

    def __len__(self) -> int:
        with self._lock:
            return len(self._powers)

    def clear(self) -> None:
        """Drop the in-memory entries; files on disk are left alone."""
        with self._lock:
            self._powers.clear()

    def power(self, ideal: MonomialIdeal, s: int) -> MonomialIdeal:
        """Return ``ideal^s`` (``s ≥ 1``), filling the cache incrementally."""
        if s == 1:
            return ideal
        start, current = self._largest_known(ideal, s)
        for t in range(start + 1, s + 1):
            current = self._store(ideal, t, product(current, ideal))
        return current

    def _largest_known(self, ideal: MonomialIdeal, s: int) -> Tuple[int, MonomialIdeal]:
        for t in range(s, 1, -1):
            found = self._lookup(ideal, t)
            if found is not None:
                logger.debug("power cache hit %s^%d (wanted %d)", ideal.fingerprint[:12], t, s)
                return t, found
        return 1, ideal

    def _lookup(self, ideal: MonomialIdeal, s: int) -> Optional[MonomialIdeal]:
        key = (ideal.fingerprint, s)
        with self._lock:
            found = self._powers.get(key)
        if found is None and self.directory is not None:
            found = self._read(ideal, s)
            if found is not None:
                with self._lock:
                    found = self._powers.setdefault(key, found)
        return found

    def _store(self, ideal: MonomialIdeal, s: int, value: MonomialIdeal) -> MonomialIdeal:
        with self._lock:
            value = self._powers.setdefault((ideal.fingerprint, s), value)
        if self.directory is not None:
            self._write(ideal, s, value)
        return value

    def _path(self, ideal: MonomialIdeal, s: int) -> Path:
        return self.directory / ideal.fingerprint / f"{s}.json"

    def _read(self, ideal: MonomialIdeal, s: int) -> Optional[MonomialIdeal]:
        from .formats import from_json
        path = self._path(ideal, s)
        if not path.is_file():
            return None
        try:
            value = from_json(path.read_text(encoding="utf-8"))
        except (SchemaError, OSError, UnicodeDecodeError) as exc:
            logger.warning("ignoring unreadable cache entry %s: %s", path, exc)
            return None
        if not isinstance(value, MonomialIdeal) or value.ring != ideal.ring:
            logger.warning("ignoring cache entry %s for another ring", path)
            return None
        return value

    def _write(self, ideal: MonomialIdeal, s: int, value: MonomialIdeal) -> None:
        from .formats import to_json
        path = self._path(ideal, s)
        if path.exists():
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        # readers never observe a partially written file
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(to_json(value))
        os.replace(tmp, path)


_default_cache = PowerCache()
_default_lock = threading.Lock()


def default_power_cache() -> PowerCache:
    """Return the process-wide cache used by :func:`monideal.base.power`."""
    with _default_lock:
        return _default_cache


def set_default_power_cache(cache: PowerCache) -> PowerCache:
    """Install ``cache`` as the process-wide default and return the previous one."""
    global _default_cache
    with _default_lock:
        previous, _default_cache = _default_cache, cache
    return previous
