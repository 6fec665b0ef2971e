from __future__ import annotations

import dataclasses
import typing

HEADER = ('knob', 'mode', 'batch', 'sample', 'distinct', 'success_lcb', 'mean_err', 'secs')


@dataclasses.dataclass(frozen = True)
class SweepRow:
    """One knob x mode cell of an experiment: mean query counts, success bound and error over its trials."""

    knob: float
    mode: str
    batch: int
    sample: int
    distinct: int
    success_lcb: float
    mean_err: float
    secs: typing.Optional[float] = None

    def __post_init__(self) -> None:
        if min(self.batch, self.sample, self.distinct) < 0:
            raise ValueError(f"Negative query count in {self}.")

        if not 0 <= self.success_lcb <= 1:
            raise ValueError(f"Success bound {self.success_lcb} outside [0, 1].")

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in HEADER}

    def to_csv(self) -> dict:
        row = self.to_dict()
        row['secs'] = '' if self.secs is None else f"{self.secs:.3f}"
        return row
