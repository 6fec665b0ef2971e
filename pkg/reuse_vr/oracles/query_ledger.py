from __future__ import annotations

import typing

from sortedcontainers import SortedSet

from .. import oracles


class QueryLedger:
    """Monotone counters of batch queries, sample queries and distinct sample keys."""

    batch_count: int
    sample_count: int

    def __init__(self) -> None:
        self.batch_count = 0
        self.sample_count = 0
        self._keys = SortedSet()

    @property
    def distinct_samples(self) -> int:
        return len(self._keys)

    @property
    def keys(self) -> SortedSet:
        return self._keys

    def has(self, key) -> bool:
        return key in self._keys

    def record_batch(self, count: int = 1) -> None:
        self.batch_count += count

    def record_samples(self, keys: typing.Iterable) -> None:
        keys = list(keys)
        self.sample_count += len(keys)
        self._keys.update(keys)

    def snapshot(self) -> oracles.LedgerSnapshot:
        return oracles.LedgerSnapshot(
            batch = self.batch_count,
            sample = self.sample_count,
            distinct = self.distinct_samples,
            )

    def to_dict(self) -> dict:
        return self.snapshot().to_dict()
