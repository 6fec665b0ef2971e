from __future__ import annotations

import typing

from reuse_vr.commons import as_vector

from .. import oracles

COMPONENT = 'component'


class ComponentOracle(oracles.OracleBundle):
    """
    Batch and component-gradient access to a finite sum F = (1/n) sum_i f_i.

    ``finite_sum`` provides ``n``, ``dim``, ``gradient(x)`` and ``component_gradient(i, x)``.
    """

    channels = (COMPONENT,)

    def __init__(self, finite_sum) -> None:
        super().__init__()
        self._finite_sum = finite_sum
        self._closures: typing.Dict[int, typing.Callable] = {}

    @property
    def n(self) -> int:
        return self._finite_sum.n

    @property
    def dim(self) -> int:
        return self._finite_sum.dim

    def key_bound(self, channel: str) -> int:
        return self._finite_sum.n

    def batch_query(self, x):
        x = as_vector(x, 'x', self.dim)
        self.record_batch()
        return self._finite_sum.gradient(x)

    def sample_query(self, key, channel: typing.Optional[str] = None) -> typing.Callable:
        key = self.grant(COMPONENT, key)

        if key not in self._closures:
            finite_sum = self._finite_sum
            self._closures[key] = lambda x: finite_sum.component_gradient(key, x)

        return self._closures[key]

    def draw(self, sampler, rng, size: int):
        return self.charge(COMPONENT, sampler.draw(rng, size))
