# possibility_cache.py
# Libraries
import threading
from typing import Callable, Hashable


class PossibilityCache:
    """
    Process-local store of cross-block order possibilities, keyed by the canonical form of their
    inputs. A key may be computed twice by racing threads; the first stored value wins.
    """

    def __init__(self):
        self.__entries: dict = {}
        self.__lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable, compute: Callable[[], list]) -> list:
        with self.__lock:
            if key in self.__entries:
                self.hits += 1
                return self.__entries[key]
        value = compute()
        with self.__lock:
            self.misses += 1
            return self.__entries.setdefault(key, value)

    def __len__(self) -> int:
        return len(self.__entries)

    def clear(self) -> None:
        with self.__lock:
            self.__entries.clear()
            self.hits = 0
            self.misses = 0


shared_cache = PossibilityCache()
