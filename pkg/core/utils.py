from collections import OrderedDict
import threading


class SimpleLRUCache:
    """A thread-safe LRU cache for expensive graph measurements (domination numbers)."""

    def __init__(self, capacity=128):
        self.capacity = capacity
        self.cache = OrderedDict()
        self.lock = threading.Lock()

    def get(self, key):
        with self.lock:
            if key not in self.cache:
                return None
            self.cache.move_to_end(key)
            return self.cache[key]

    def set(self, key, value):
        with self.lock:
            if key in self.cache:
                self.cache.move_to_end(key)
            self.cache[key] = value
            if len(self.cache) > self.capacity:
                self.cache.popitem(last=False)

    def get_or_compute(self, key, compute):
        """Return the cached value for key, computing and storing it on a miss.

        Failures (e.g. a solver hitting its resource limit) are not cached.
        """
        value = self.get(key)
        if value is None:
            value = compute()
            self.set(key, value)
        return value

    def clear(self):
        with self.lock:
            self.cache.clear()


# Keyed by (Graph, hops); Graph is a frozen dataclass and therefore hashable.
DOMINATION_CACHE = SimpleLRUCache(capacity=64)
