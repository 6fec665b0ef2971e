from __future__ import annotations

import dataclasses
import typing

import numpy


@dataclasses.dataclass(frozen = True)
class Policy:
    """A deterministic policy: ``actions[s]`` is the local index of the action taken in state ``s``."""

    actions: typing.Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'actions', tuple(int(action) for action in self.actions))

    def __len__(self) -> int:
        return len(self.actions)

    def pairs(self, m) -> numpy.ndarray:
        """Global state-action pair indices of the policy in ``m``."""
        return m.offsets[:-1] + numpy.asarray(self.actions, dtype = numpy.int64)

    def to_list(self) -> typing.List[int]:
        return list(self.actions)
