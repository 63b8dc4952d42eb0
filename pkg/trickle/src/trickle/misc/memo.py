import threading
from collections import OrderedDict
from collections.abc import Callable, Hashable

from trickle.logger import get_logger
from trickle.settings import get_settings

logger = get_logger(__name__)


class Memo[K: Hashable, V]:
    """Thread-safe memo table with least-recently-used eviction.

    Lookups and insertions hold a lock; values are computed outside it, so two
    threads may compute the same entry and the last writer wins. Every cached
    computation in the package is deterministic, so both writes agree.

    The table holds at most `max_entries` values; when unset, the bound is read
    from `Settings.memo_max_entries` at insertion time.
    """

    def __init__(self, name: str, max_entries: int | None = None) -> None:
        """Create an empty memo named `name`."""
        if max_entries is not None and max_entries < 1:
            msg = f"memo {name!r} needs room for at least one entry, got {max_entries}"
            raise ValueError(msg)
        self.name = name
        self.max_entries = max_entries
        self._data: OrderedDict[K, V] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.evictions = 0

    @property
    def capacity(self) -> int:
        """Current entry bound."""
        return self.max_entries if self.max_entries is not None else get_settings().memo_max_entries

    def get_or_compute(self, key: K, compute: Callable[[], V]) -> V:
        """Return the cached value for `key`, computing and storing it on a miss."""
        with self._lock:
            if key in self._data:
                self.hits += 1
                self._data.move_to_end(key)
                return self._data[key]
            self.misses += 1
        value = compute()
        capacity = self.capacity
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            dropped = 0
            while len(self._data) > capacity:
                self._data.popitem(last=False)
                dropped += 1
            self.evictions += dropped
        if dropped:
            logger.debug(
                "Evicted memo entries",
                extra={"memo": self.name, "dropped": dropped, "capacity": capacity},
            )
        return value

    def clear(self) -> None:
        """Drop every entry."""
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0
            self.evictions = 0

    def __len__(self) -> int:
        """Number of cached entries."""
        with self._lock:
            return len(self._data)
