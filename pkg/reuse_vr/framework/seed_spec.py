from __future__ import annotations

import dataclasses
import typing

import numpy

from reuse_vr.errors import SeedTooShortError

from .. import framework


@dataclasses.dataclass(frozen = True)
class SeedSpec:
    """
    Distribution of an oblivious seed: ``length`` records drawn by ``draw_records(bundle, rng, length)``.

    ``draw_records`` goes through the bundle, so the draw itself is charged as sample queries.
    ``probabilities`` is the law of one record when records are indices.
    """

    dist_id: str
    length: int
    draw_records: typing.Callable[[typing.Any, numpy.random.Generator, int], numpy.ndarray]
    probabilities: typing.Optional[numpy.ndarray] = dataclasses.field(default = None, compare = False)

    def draw(self, bundle, rng: numpy.random.Generator, draw_index: int = 0) -> framework.ObliviousSeed:
        records = self.draw_records(bundle, rng, self.length)
        return framework.ObliviousSeed(records = records, dist_id = self.dist_id, draw_index = draw_index)

    def with_length(self, length: int) -> SeedSpec:
        return dataclasses.replace(self, length = int(length))

    def check(self, seed: framework.ObliviousSeed, solver: str) -> None:
        if len(seed) < self.length:
            raise SeedTooShortError(solver, self.length, len(seed))
