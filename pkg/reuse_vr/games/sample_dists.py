from __future__ import annotations

import dataclasses
import typing

import numpy

from reuse_vr.commons import AliasSampler
from reuse_vr.errors import ParameterRangeError
from reuse_vr.framework import SeedSpec
from reuse_vr.oracles.matrix_oracle import COLUMN, ENTRY, ROW

from .. import games


@dataclasses.dataclass(frozen = True, eq = False)
class SampleDists:
    """
    The oblivious sampling distributions of a game matrix:

    - ``row``: P(i) = |a_i|^2 / |A|_F^2;
    - ``column``: P(j) = |A_{:, j}|^2 / |A|_F^2;
    - ``entry[i]``: P(j) = A_ij^2 / |a_i|^2, None for a zero row.
    """

    row: AliasSampler
    column: AliasSampler
    entry: typing.Tuple[typing.Optional[AliasSampler], ...]


def sample_dists(game: games.CompositeGame) -> SampleDists:
    squares = game.matrix ** 2

    if not squares.sum() > 0:
        raise ParameterRangeError('matrix', 'all-zero', 'a matrix with a nonzero entry')

    return SampleDists(
        row = AliasSampler(squares.sum(axis = 1)),
        column = AliasSampler(squares.sum(axis = 0)),
        entry = tuple(AliasSampler(row) if row.sum() > 0 else None for row in squares),
        )


def row_column_seed_spec(game: games.CompositeGame, length: int) -> SeedSpec:
    """Seeds of ``length`` (row, column) pairs, i ~ D_row and j ~ D_col, charged on their channels."""
    dists = sample_dists(game)

    def draw_records(bundle, rng, size):
        rows = bundle.charge(ROW, dists.row.draw(rng, size))
        columns = bundle.charge(COLUMN, dists.column.draw(rng, size))
        return numpy.stack([rows, columns], axis = 1)

    return SeedSpec(dist_id = f"row-column[{game.m}x{game.n}]", length = int(length), draw_records = draw_records)


def entry_seed_spec(game: games.CompositeGame, length: int) -> SeedSpec:
    """
    Seeds of ``length`` rows holding, for every matrix row q, a column j ~ D_entry(q); the draws
    are charged as entry queries. Zero rows hold -1 and cost nothing.
    """
    dists = sample_dists(game)

    def draw_records(bundle, rng, size):
        records = numpy.full((size, game.m), -1, dtype = numpy.int64)

        for q, sampler in enumerate(dists.entry):
            if sampler is not None:
                columns = sampler.draw(rng, size)
                bundle.charge(ENTRY, q * game.n + columns)
                records[:, q] = columns

        return records

    return SeedSpec(dist_id = f"entries[{game.m}x{game.n}]", length = int(length), draw_records = draw_records)
