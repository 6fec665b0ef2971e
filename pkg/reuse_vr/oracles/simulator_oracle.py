from __future__ import annotations

import typing

import numpy

from reuse_vr.commons import as_vector

from .. import oracles

SIMULATOR = 'simulator'


class SimulatorOracle(oracles.OracleBundle):
    """
    Matrix-vector products with P and successor draws s' ~ p(s, a).

    Every draw is counted: one call returns one fresh successor.
    """

    channels = (SIMULATOR,)

    def __init__(self, transitions, rng: typing.Optional[numpy.random.Generator] = None) -> None:
        super().__init__()
        transitions = transitions.tocsr(copy = True)
        transitions.eliminate_zeros()
        self._transitions = transitions
        self._rng = rng if rng is not None else numpy.random.default_rng(0)
        self._cumulative = numpy.cumsum(transitions.data)
        starts = transitions.indptr[:-1]
        self._starts = starts
        self._stops = transitions.indptr[1:]
        self._before = numpy.where(starts > 0, self._cumulative[numpy.maximum(starts - 1, 0)], 0.0)
        self._mass = self._cumulative[self._stops - 1] - self._before

    @property
    def n_pairs(self) -> int:
        return self._transitions.shape[0]

    @property
    def n_states(self) -> int:
        return self._transitions.shape[1]

    def key_bound(self, channel: str) -> int:
        return self.n_pairs

    def batch_query(self, x):
        x = as_vector(x, 'x', self.n_states)
        self.record_batch()
        return self._transitions @ x

    def simulate(self, pairs, rng: numpy.random.Generator) -> numpy.ndarray:
        pairs = self.charge(SIMULATOR, pairs)
        targets = self._before[pairs] + rng.random(len(pairs)) * self._mass[pairs]
        positions = numpy.searchsorted(self._cumulative, targets, side = 'right')
        positions = numpy.clip(positions, self._starts[pairs], self._stops[pairs] - 1)
        return self._transitions.indices[positions]

    def sample_query(self, key, channel: typing.Optional[str] = None) -> int:
        return int(self.simulate([key], self._rng)[0])
