"""On-disk cache of component matrices.

Each entry is the matrix CSV plus a JSON sidecar holding the cache key, the
enumerated words and a SHA-256 of the CSV.  Keys include the enumeration
version, so changing the word order invalidates old entries.  A checksum
mismatch is treated as a miss and the entry is rebuilt.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

from .components import ENUMERATION_VERSION, Component, graded_component
from .config import default_cache_dir
from .linalg import QMatrix, rank

log = logging.getLogger(__name__)


def cache_key(algebra: str, weight: int, degree: int, basis: str) -> str:
    return f"{algebra}-w{weight}-r{degree}-{basis}-{ENUMERATION_VERSION}"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


class ComponentCache:
    def __init__(self, root: Optional[Path]):
        self.root = Path(root) if root is not None else None

    def _paths(self, key: str):
        return self.root / f"{key}.csv", self.root / f"{key}.json"

    def load(self, algebra: str, weight: int, degree: int, basis: str) -> Optional[QMatrix]:
        if self.root is None:
            return None
        key = cache_key(algebra, weight, degree, basis)
        csv_path, meta_path = self._paths(key)
        try:
            meta = json.loads(meta_path.read_text(encoding="utf-8"))
            text = csv_path.read_text(encoding="utf-8")
        except (OSError, ValueError):
            return None
        if meta.get("key") != key or meta.get("sha256") != hashlib.sha256(text.encode()).hexdigest():
            log.warning("cache entry %s failed its checksum; recomputing", key)
            return None
        try:
            return QMatrix.from_csv(text)
        except (ValueError, IndexError, StopIteration):
            log.warning("cache entry %s is unreadable; recomputing", key)
            return None

    def store(self, comp: Component) -> None:
        if self.root is None:
            return
        key = cache_key(comp.algebra, comp.weight, comp.degree, comp.basis)
        csv_path, meta_path = self._paths(key)
        text = comp.matrix().to_csv()
        meta = {
            "key": key,
            "sha256": hashlib.sha256(text.encode()).hexdigest(),
            "words": [str(w) for w in comp.words],
            "monomials": [list(e) for e in comp.monomials],
        }
        _atomic_write(csv_path, text)
        _atomic_write(meta_path, json.dumps(meta))

    def matrix(self, algebra: str, weight: int, degree: int, basis: str = "lyndon", max_rows: int = 5000) -> QMatrix:
        M = self.load(algebra, weight, degree, basis)
        if M is None:
            comp = graded_component(algebra, weight, degree, basis, max_rows)
            self.store(comp)
            M = comp.matrix()
        return M


_default: Optional[ComponentCache] = None


def default_cache() -> ComponentCache:
    global _default
    if _default is None:
        _default = ComponentCache(default_cache_dir())
    return _default


def set_default_cache(cache: Optional[ComponentCache]) -> None:
    global _default
    _default = cache


def component_rank(algebra: str, weight: int, degree: int, basis: str = "lyndon") -> int:
    return rank(default_cache().matrix(algebra, weight, degree, basis))
