from __future__ import annotations

import typing

import numpy

from reuse_vr.commons import as_vector

from .. import oracles

ROW = 'row'
COLUMN = 'column'
ENTRY = 'entry'


class MatrixOracle(oracles.OracleBundle):
    """
    Access to the payoff matrix A (m x n) of a bilinear game y^T A x.

    Entry keys are flattened: key = i * n + j.
    """

    channels = (ROW, COLUMN, ENTRY)

    def __init__(self, matrix) -> None:
        super().__init__()
        self._matrix = numpy.array(matrix, dtype = float)
        self._matrix.setflags(write = False)

    @property
    def shape(self) -> typing.Tuple[int, int]:
        return self._matrix.shape

    def key_bound(self, channel: str) -> int:
        m, n = self._matrix.shape
        return {ROW: m, COLUMN: n, ENTRY: m * n}[channel]

    def split(self, z) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
        m, n = self._matrix.shape

        if isinstance(z, (tuple, list)) and len(z) == 2:
            return as_vector(z[0], 'x', n), as_vector(z[1], 'y', m)

        z = as_vector(z, 'z', n + m)
        return z[:n], z[n:]

    def batch_query(self, z) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
        x, y = self.split(z)
        self.record_batch()
        return self._matrix @ x, self._matrix.T @ y

    def sample_query(self, key, channel: typing.Optional[str] = None):
        channel = self._channel(channel)

        if channel == ENTRY and isinstance(key, (tuple, list)):
            key = int(key[0]) * self._matrix.shape[1] + int(key[1])

        key = self.grant(channel, key)

        if channel == ROW:
            return self._matrix[key]

        if channel == COLUMN:
            return self._matrix[:, key]

        return float(self._matrix.flat[key])

    def entry_key(self, rows, columns) -> numpy.ndarray:
        return numpy.asarray(rows) * self._matrix.shape[1] + numpy.asarray(columns)

    def rows(self, keys) -> numpy.ndarray:
        """Rows a_i for an array of row keys, granted like :meth:`sample_query`."""
        keys = numpy.asarray(keys)
        return self._matrix[self.grant_many(ROW, keys).reshape(keys.shape)]

    def columns(self, keys) -> numpy.ndarray:
        """Columns of A, one per key, stacked as rows."""
        keys = numpy.asarray(keys)
        return self._matrix.T[self.grant_many(COLUMN, keys).reshape(keys.shape)]

    def entries(self, rows, columns) -> numpy.ndarray:
        keys = self.entry_key(rows, columns)
        return self._matrix.flat[self.grant_many(ENTRY, keys)].reshape(keys.shape)
