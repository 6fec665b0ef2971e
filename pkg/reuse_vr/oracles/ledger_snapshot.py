from __future__ import annotations

import dataclasses


@dataclasses.dataclass(frozen = True)
class LedgerSnapshot:
    """
    Frozen ledger counters. Snapshots add and subtract component-wise:

        >>> LedgerSnapshot(1, 10, 4) - LedgerSnapshot(1, 6, 4)
        LedgerSnapshot(batch = 0, sample = 4, distinct = 0)
    """

    batch: int = 0
    sample: int = 0
    distinct: int = 0

    def __add__(self, other: LedgerSnapshot) -> LedgerSnapshot:
        return LedgerSnapshot(
            batch = self.batch + other.batch,
            sample = self.sample + other.sample,
            distinct = self.distinct + other.distinct,
            )

    def __sub__(self, other: LedgerSnapshot) -> LedgerSnapshot:
        return LedgerSnapshot(
            batch = self.batch - other.batch,
            sample = self.sample - other.sample,
            distinct = self.distinct - other.distinct,
            )

    def __repr__(self) -> str:
        return f"LedgerSnapshot(batch = {self.batch}, sample = {self.sample}, distinct = {self.distinct})"

    def to_dict(self) -> dict:
        return {'batch': self.batch, 'sample': self.sample, 'distinct': self.distinct}
