"""Module for the residual-polynomial cache."""

import json
import os
import threading
from pathlib import Path
from typing import Callable, Dict, Optional

from hurwitz_strata.algebra import Polynomial
from hurwitz_strata.logger import get_logger

# Bump when the stored residual format changes
SCHEMA_VERSION = 1
CACHE_FILENAME = 'residuals.json'

# Setup logger
logger = get_logger(__name__)


class ResidualCache:
    """Memo table of residual polynomials keyed by label text.

    Values are deterministic, so concurrent writers may overwrite each other freely.
    """

    def __init__(self, cache_dir: Optional[Path] = None):
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self._entries: Dict[str, Polynomial] = {}
        self._lock = threading.Lock()
        self._dirty = False
        if self.cache_dir:
            self._load()

    @classmethod
    def from_env(cls) -> 'ResidualCache':
        """Create a cache backed by STRATA_CACHE_DIR when that variable is set."""
        cache_dir = os.getenv('STRATA_CACHE_DIR')
        return cls(Path(cache_dir) if cache_dir else None)

    @property
    def cache_file(self) -> Optional[Path]:
        return self.cache_dir / CACHE_FILENAME if self.cache_dir else None

    def _load(self) -> None:
        cache_file = self.cache_file
        if not cache_file.exists():
            logger.debug(f'No residual cache at {cache_file}')
            return

        try:
            with open(cache_file, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, ValueError) as e:
            logger.warning(f'Ignoring unreadable residual cache {cache_file}: {str(e)}')
            return

        if data.get('schema_version') != SCHEMA_VERSION:
            logger.warning(
                f'Ignoring residual cache with schema {data.get("schema_version")}, '
                f'expected {SCHEMA_VERSION}'
            )
            return

        for label, poly in data.get('residuals', {}).items():
            self._entries[label] = Polynomial.from_json(poly)
        logger.info(f'Loaded {len(self._entries)} residual polynomials from {cache_file}')

    def get(self, label: str) -> Optional[Polynomial]:
        return self._entries.get(label)

    def put(self, label: str, value: Polynomial) -> None:
        with self._lock:
            if self._entries.get(label) != value:
                self._entries[label] = value
                self._dirty = True

    def get_or_compute(self, label: str, compute: Callable[[], Polynomial]) -> Polynomial:
        cached = self.get(label)
        if cached is not None:
            return cached
        value = compute()
        self.put(label, value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self._dirty = False

    def persist(self) -> Optional[Path]:
        """Write the cache file if a directory is configured and entries changed.

        Returns:
            Path to the written file, or None when nothing was written
        """
        if not self.cache_dir or not self._dirty:
            return None

        os.makedirs(self.cache_dir, exist_ok=True)
        with self._lock:
            payload = {
                'schema_version': SCHEMA_VERSION,
                'residuals': {
                    label: self._entries[label].to_json() for label in sorted(self._entries)
                },
            }
            self._dirty = False

        with open(self.cache_file, 'w', encoding='utf-8') as f:
            json.dump(payload, f, indent=2, ensure_ascii=False)

        logger.info(f'Residual cache saved to {self.cache_file}')
        return self.cache_file


# Shared cache for the whole process
RESIDUALS = ResidualCache.from_env()
