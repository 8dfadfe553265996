import os
import time
import contextlib
import typing as t
from collections import OrderedDict


T_1 = t.TypeVar('T_1')
K_1 = t.TypeVar('K_1')

def env(name: str, default: t.Any, var_type: t.Type[T_1] = str) -> T_1:
    """
    Get an env variable and cast it to the given type.

    Note: if the type is `bool`, values like "false", "no", and "0" are treated as False.
    """
    value = os.environ.get(name)

    if value is None:
        return default

    if var_type is bool:
        if isinstance(value, str):
            value = value.lower() not in {'false', 'no', '0', ''}

        return bool(value)

    return var_type(value)


def is_like_list(obj) -> bool:
    """Return True if the object is iterable and not str, bytes, bytearray or a mapping."""
    return (
        hasattr(obj, '__iter__')
        and not isinstance(obj, (str, bytes, bytearray, dict))
    )


# classes
class Cache(t.Generic[K_1, T_1]):
    """
    A bounded memo with least-recently-used eviction.

    Normal forms of words are memoised per rewrite system; the cache keeps
    the most recently used `max_size` entries and evicts in batches so a
    full cache costs amortised O(1) per insert.

    Example:
    ```python
    c = Cache(max_size=2)

    c.add_or_update('key1', 10)
    c.add_or_update('key2', 11)
    c.get('key1')
    c.add_or_update('key3', 12)

    c.get('key2')
    >>> None
    ```
    """
    def __len__(self):
        return len(self._cache_data)

    def __init__(self, max_size: int = 1000, slack: float = 0.0):
        self.max_size = max_size
        self.slack = int(max_size * slack)

        self._cache_data: 'OrderedDict[K_1, T_1]' = OrderedDict()

    def get(self, key: K_1, default: t.Optional[T_1] = None) -> t.Optional[T_1]:
        try:
            value = self._cache_data[key]

        except KeyError:
            return default

        self._cache_data.move_to_end(key)
        return value

    def check(self):
        excess = len(self._cache_data) - self.max_size

        if excess > self.slack:
            for _ in range(excess):
                self._cache_data.popitem(last=False)

    def add_or_update(self, key: K_1, value: T_1, *, check: bool = True) -> T_1:
        self._cache_data[key] = value
        self._cache_data.move_to_end(key)

        if check:
            self.check()

        return value


class Stopwatch:
    """
    Wall-clock laps keyed by name.

    Example:
    ```python
    watch = Stopwatch()
    with watch.lap('resolution'):
        ...

    print(watch.laps) # {'resolution': 0.42}
    ```
    """
    def __init__(self):
        self.laps: t.Dict[str, float] = {}

    @contextlib.contextmanager
    def lap(self, name: str):
        start = time.perf_counter()
        try:
            yield self

        finally:
            elapsed = time.perf_counter() - start
            self.laps[name] = round(self.laps.get(name, 0.0) + elapsed, 6)

    @property
    def total(self) -> float:
        return round(sum(self.laps.values()), 6)
