from __future__ import annotations

import dataclasses

import numpy


@dataclasses.dataclass(frozen = True)
class ObliviousSeed:
    """A realized draw from an oblivious distribution; records are read-only so the seed can be replayed."""

    records: numpy.ndarray
    dist_id: str
    draw_index: int = 0

    def __post_init__(self) -> None:
        records = numpy.array(self.records)
        records.setflags(write = False)
        object.__setattr__(self, 'records', records)

    def __len__(self) -> int:
        return self.records.shape[0]

    @property
    def identifier(self) -> str:
        return f"{self.dist_id}#{self.draw_index}"
