"""On-disk cache for signed reduced-word tables and Schur expansions.

One JSON file per (module, n, code version). A file that fails to parse or
whose header does not match is treated as absent and rewritten.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Callable

from . import __version__

CACHE_FORMAT = 1
CODE_VERSION = f"{__version__}+c{CACHE_FORMAT}"
ENV_VAR = "ODDCAT_CACHE"

log = logging.getLogger(__name__)


def default_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "oddcat"


def resolve_dir(explicit: str | os.PathLike | None = None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else default_dir()


def _dumps(doc: Any) -> bytes:
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()


class DiskCache:
    def __init__(self, root: str | os.PathLike, version: str = CODE_VERSION):
        self.root = Path(root)
        self.version = version

    def path(self, module: str, n: int) -> Path:
        return self.root / f"{module}-n{n}-v{self.version}.json"

    def load(self, module: str, n: int) -> Any | None:
        p = self.path(module, n)
        try:
            doc = json.loads(p.read_bytes())
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache file %s: %s", p, exc)
            return None
        if not isinstance(doc, dict) or doc.get("header") != self._header(module, n):
            log.warning("ignoring cache file %s with foreign header", p)
            return None
        return doc.get("data")

    def store(self, module: str, n: int, data: Any) -> Path:
        p = self.path(module, n)
        p.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, prefix=p.name, suffix=".tmp")
        with os.fdopen(fd, "wb") as fh:
            fh.write(_dumps({"header": self._header(module, n), "data": data}))
        os.replace(tmp, p)
        return p

    def get_or_build(self, module: str, n: int, build: Callable[[], Any]) -> tuple[Any, bool]:
        """Cached payload and whether it was a hit; decoding errors count as a miss."""
        data = self.load(module, n)
        if data is not None:
            return data, True
        data = build()
        self.store(module, n, data)
        return data, False

    def _header(self, module: str, n: int) -> dict:
        return {"format": CACHE_FORMAT, "module": module, "n": n, "version": self.version}


# ---------------------------------------------------------------- payload codecs

def _key(t) -> str:
    return ",".join(map(str, t))


def _unkey(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.split(",")) if s else ()


def encode_word_table(tables: dict) -> dict:
    return {_key(w): {_key(word): s for word, s in tab.items()} for w, tab in tables.items()}


def decode_word_table(data: dict) -> dict:
    return {_unkey(w): {_unkey(word): int(s) for word, s in tab.items()} for w, tab in data.items()}


def encode_expansions(mats: dict) -> dict:
    """``{total: {λ: {μ: c}}}`` with partitions as comma strings."""
    return {
        str(total): {_key(lam): {_key(mu): c for mu, c in row.items()} for lam, row in m.items()}
        for total, m in mats.items()
    }


def decode_expansions(data: dict) -> dict:
    return {
        int(total): {_unkey(lam): {_unkey(mu): int(c) for mu, c in row.items()} for lam, row in m.items()}
        for total, m in data.items()
    }


def warm_word_table(cache: DiskCache | None, n: int) -> bool:
    """Fill ``word_table(n)`` from disk, or build it fully and store it. Returns hit."""
    from .oddnilhecke import word_table

    tab = word_table(n)
    if cache is None:
        return False

    def build():
        tab.fill()
        return encode_word_table(tab.export())

    data, hit = cache.get_or_build("signed_words", n, build)
    if hit:
        try:
            tab.load(decode_word_table(data))
        except (AttributeError, TypeError, ValueError):
            log.warning("rebuilding malformed signed-word cache for n=%d", n)
            tab.fill()
            cache.store("signed_words", n, encode_word_table(tab.export()))
            return False
    return hit


def schur_expansions(cache: DiskCache | None, n: int, max_total: int, target: str) -> dict:
    """Schur-to-``target`` transition matrices for totals 0..max_total, cached per n."""
    from .oddsym import Partition, transition_matrix

    def build():
        return encode_expansions({t: transition_matrix(n, t, "schur", target) for t in range(max_total + 1)})

    module = f"schur_{target}"
    if cache is None:
        data = build()
    else:
        data = cache.load(module, n)
        try:
            ok = data is not None and all(str(t) in data for t in range(max_total + 1))
        except TypeError:
            ok = False
        if not ok:
            data = build()
            cache.store(module, n, data)
    try:
        mats = decode_expansions(data)
    except (AttributeError, TypeError, ValueError):
        data = build()
        if cache is not None:
            cache.store(module, n, data)
        mats = decode_expansions(data)
    return {
        t: {Partition(lam): {Partition(mu): c for mu, c in row.items()} for lam, row in mats[t].items()}
        for t in range(max_total + 1)
    }
