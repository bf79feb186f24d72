"""
Persisted monomial-product tables for the quadric rings.

One JSON file per space under the cache directory:

    {"engine_version": "...", "space": "quadric:5",
     "entries": {"a,b,i,j,m|a,b,i,j,m": [[coeff, [a, b, i, j, m]], ...]}}

Coefficients are lists of [kind, a, b, value] with value an integer or
[a, b] for a Burnside element.
"""

from __future__ import annotations

import json
import logging
import os
import random
import tempfile
from pathlib import Path
from typing import Callable

from . import __version__, hpoint
from .burnside import BurnsideElem
from .hpoint import HElem, HSymbol, Kind
from .ring import Mono, Space, Terms

log = logging.getLogger("eqquad.table_cache")

Compute = Callable[[Mono, Mono], Terms]


def _mono_key(mono: Mono) -> str:
    m = "" if mono.m is None else str(mono.m)
    return f"{mono.a},{mono.b},{mono.i},{mono.j},{m}"


def _mono_from_key(key: str) -> Mono:
    a, b, i, j, m = key.split(",")
    return Mono(int(a), int(b), int(i), int(j), None if m == "" else int(m))


def _encode_coeff(h: HElem) -> list:
    out = []
    for sym, c in h.items():
        value = [c.a, c.b] if isinstance(c, BurnsideElem) else c
        out.append([int(sym.kind), sym.a, sym.b, value])
    return out


def _decode_coeff(raw: list) -> HElem:
    items = []
    for kind, a, b, value in raw:
        c = BurnsideElem(*value) if isinstance(value, list) else value
        items.append((HSymbol(Kind(kind), a, b), c))
    return hpoint.HElem(items)


def encode_terms(terms: Terms) -> list:
    return [[_encode_coeff(c), _mono_key(mono)] for mono, c in terms.items()]


def decode_terms(raw: list) -> Terms:
    return Terms((_mono_from_key(key), _decode_coeff(c)) for c, key in raw)


class TableCache:
    """
    Memo of basis-monomial products for one space, optionally backed by a file.

    Args:
        space: The quadric the products live in
        compute: Product of two monomials, used on a miss and for validation
        path: JSON file location, or None for an in-memory table
        seed: Picks the entry recomputed when a file is loaded
    """

    def __init__(self, space: Space, compute: Compute, path: str | Path | None = None, seed: int = 0):
        self.space = space
        self.compute = compute
        self.path = Path(path) if path is not None else None
        self.seed = seed
        self.entries: dict[str, Terms] = {}
        self.hits = 0
        self.misses = 0
        self.dirty = False

    @classmethod
    def for_space(cls, space: Space, cache_dir: str, seed: int = 0) -> TableCache:
        from . import quadric

        path = Path(cache_dir) / f"products-{space.tag.replace(':', '-').replace('|', '_')}.json"
        cache = cls(space, lambda x, y: quadric.mono_product(space.p, x, y), path, seed)
        cache.load()
        return cache

    def product(self, x: Mono, y: Mono, compute: Compute | None = None) -> Terms:
        key = f"{_mono_key(x)}|{_mono_key(y)}"
        hit = self.entries.get(key)
        if hit is not None:
            self.hits += 1
            return hit
        self.misses += 1
        value = (compute or self.compute)(x, y)
        self.entries[key] = value
        self.dirty = True
        return value

    def load(self) -> bool:
        """Read the file; returns False (and keeps an empty table) when it is stale or broken."""
        if self.path is None or not self.path.is_file():
            return False
        try:
            data = json.loads(self.path.read_text(encoding="utf-8"))
            entries = {key: decode_terms(raw) for key, raw in data["entries"].items()}
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("discarding unreadable product table %s: %s", self.path, exc)
            return False
        if data.get("engine_version") != __version__ or data.get("space") != self.space.tag:
            log.warning("discarding product table %s from engine %s", self.path, data.get("engine_version"))
            return False
        if entries:
            key = random.Random(self.seed).choice(sorted(entries))
            x, y = (_mono_from_key(part) for part in key.split("|"))
            if self.compute(x, y) != entries[key]:
                log.warning("discarding product table %s: entry %s failed recomputation", self.path, key)
                return False
        self.entries = entries
        log.debug("loaded %d products from %s", len(entries), self.path)
        return True

    def save(self) -> None:
        if self.path is None or not self.dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "engine_version": __version__,
            "space": self.space.tag,
            "entries": {key: encode_terms(terms) for key, terms in sorted(self.entries.items())},
        }
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".products-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=1)
            os.replace(tmp, self.path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        self.dirty = False
        log.debug("saved %d products to %s", len(self.entries), self.path)
