"""On-disk cache of Littlewood-Richardson decompositions."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .lie_repr import DEFAULT_BUDGET, TensorDecomposition, Weight, tensor_decompose
from .report import atomic_write_text

CACHE_VERSION = 1
ENV_VAR = "BEURLING_CACHE_DIR"
FILENAME = "lr-cache.json"


def default_cache_dir(flag: str | None = None) -> Path:
    """--cache-dir, then $BEURLING_CACHE_DIR, then the per-user data directory."""
    if flag:
        return Path(flag)
    if os.environ.get(ENV_VAR):
        return Path(os.environ[ENV_VAR])
    base = os.environ.get("XDG_DATA_HOME") or Path.home() / ".local" / "share"
    return Path(base) / "beurling"


def _key(n: int, lam: Weight, mu: Weight) -> str:
    return f"{n}|{','.join(map(str, lam))}|{','.join(map(str, mu))}"


class LRCache:
    def __init__(self, directory: str | os.PathLike):
        self.path = Path(directory) / FILENAME
        self.entries: dict[str, list] = {}
        self.hits = self.misses = 0
        self._dirty = False
        self._load()

    def _load(self) -> None:
        try:
            doc = json.loads(self.path.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return
        if isinstance(doc, dict) and doc.get("version") == CACHE_VERSION:
            self.entries = doc.get("entries", {})

    def decompose(self, n: int, lam: Weight, mu: Weight, budget: int = DEFAULT_BUDGET) -> TensorDecomposition:
        key = _key(n, tuple(lam), tuple(mu))
        terms = self.entries.get(key)
        if terms is not None:
            self.hits += 1
            return TensorDecomposition(n, tuple(lam), tuple(mu), {tuple(nu): c for nu, c in terms})
        self.misses += 1
        dec = tensor_decompose(n, lam, mu, budget)
        self.entries[key] = [[list(nu), c] for nu, c in dec.terms.items()]
        self._dirty = True
        return dec

    def save(self) -> None:
        if not self._dirty:
            return
        doc = {"version": CACHE_VERSION, "entries": dict(sorted(self.entries.items()))}
        atomic_write_text(self.path, json.dumps(doc, separators=(",", ":")))
        self._dirty = False

    def clear(self) -> None:
        self.entries.clear()
        self._dirty = False
        try:
            self.path.unlink()
        except FileNotFoundError:
            pass
