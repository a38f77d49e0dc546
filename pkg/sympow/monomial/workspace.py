from __future__ import annotations

import hashlib
import json
import threading
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

from sympow.logger import get_logger
from sympow.monomial.ideal import DEFAULT_GENERATOR_CAP, multiply, power
from sympow.monomial.types import MonomialIdeal

logger = get_logger("sympow.workspace")

CacheKey = Tuple[str, str, Any]


class Workspace:
    """
    Per-session cache of computed ideals (ordinary, symbolic and closure powers).

    Values are immutable, so concurrent readers only need the lock around the
    dictionary itself. With a cache directory the entries are also persisted
    as JSON files named by a hash of (operation, ideal, argument).
    """

    def __init__(
        self,
        cache_dir: Optional[Path] = None,
        generator_cap: int = DEFAULT_GENERATOR_CAP,
    ) -> None:
        self.cache_dir = cache_dir
        self.generator_cap = generator_cap
        self._lock = threading.Lock()
        self._memory: Dict[CacheKey, MonomialIdeal] = {}
        self.hits = 0
        self.misses = 0
        if cache_dir is not None:
            cache_dir.mkdir(parents=True, exist_ok=True)

    def _path(self, key: CacheKey) -> Path:
        digest = hashlib.sha256(f"{key[0]}|{key[1]}|{key[2]!r}".encode()).hexdigest()
        return self.cache_dir / f"{digest}.json"

    def _read_disk(self, key: CacheKey, source: MonomialIdeal) -> Optional[MonomialIdeal]:
        if self.cache_dir is None:
            return None
        path = self._path(key)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"Ignoring unreadable cache entry {path.name}: {e}")
            return None
        if data.get("vars") != list(source.ring.variables):
            return None
        return MonomialIdeal(source.ring, tuple(tuple(g) for g in data["gens"]))

    def _write_disk(self, key: CacheKey, value: MonomialIdeal) -> None:
        if self.cache_dir is None:
            return
        payload = {
            "operation": key[0],
            "argument": repr(key[2]),
            "vars": list(value.ring.variables),
            "gens": [list(g) for g in value.generators],
        }
        try:
            self._path(key).write_text(json.dumps(payload), encoding="utf-8")
        except OSError as e:
            logger.warning(f"Could not persist cache entry for {key[0]}: {e}")

    def cached(
        self,
        operation: str,
        source: MonomialIdeal,
        argument: Any,
        compute: Callable[[], MonomialIdeal],
    ) -> MonomialIdeal:
        key = (operation, source.fingerprint, argument)
        with self._lock:
            hit = self._memory.get(key)
            if hit is not None:
                self.hits += 1
                return hit

        value = self._read_disk(key, source)
        if value is None:
            value = compute()
            self._write_disk(key, value)

        with self._lock:
            self.misses += 1
            return self._memory.setdefault(key, value)

    def power(self, I: MonomialIdeal, r: int) -> MonomialIdeal:
        if r <= 1:
            return power(I, r, self.generator_cap)
        # bottom-up so every intermediate power lands in the cache
        start = 2
        with self._lock:
            while ("power", I.fingerprint, start) in self._memory and start < r:
                start += 1
        for k in range(start, r + 1):
            self.cached(
                "power",
                I,
                k,
                lambda k=k: multiply(self.power(I, k - 1), I, self.generator_cap),
            )
        return self.cached("power", I, r, lambda: power(I, r, self.generator_cap))

    def clear(self) -> None:
        with self._lock:
            self._memory.clear()
