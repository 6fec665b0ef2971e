from __future__ import annotations

import numpy

from reuse_vr.errors import ParameterRangeError


class AliasSampler:
    """
    Walker/Vose alias table over a finite discrete distribution.

    Building the table costs O(n); each draw costs O(1). Zero-weight outcomes are never drawn.

        >>> sampler = AliasSampler([1.0, 0.0, 3.0])
        >>> sampler.probabilities.tolist()
        [0.25, 0.0, 0.75]
    """

    def __init__(self, weights) -> None:
        weights = numpy.asarray(weights, dtype = float).ravel()

        if weights.size == 0 or not numpy.isfinite(weights).all() or (weights < 0).any():
            raise ParameterRangeError('weights', weights, 'finite nonnegative entries')

        total = weights.sum()

        if total <= 0:
            raise ParameterRangeError('weights', weights, 'a positive total mass')

        self.probabilities = weights / total
        size = len(weights)
        scaled = self.probabilities * size
        prob = numpy.ones(size)
        alias = numpy.arange(size)

        smaller = [index for index in range(size) if scaled[index] < 1.0]
        larger = [index for index in range(size) if scaled[index] >= 1.0]

        while smaller and larger:
            small, large = smaller.pop(), larger.pop()
            prob[small] = scaled[small]
            alias[small] = large
            scaled[large] = (scaled[large] + scaled[small]) - 1.0

            if scaled[large] < 1.0:
                smaller.append(large)
            else:
                larger.append(large)

        # Leftovers only differ from 1 by rounding.
        for index in smaller + larger:
            prob[index] = 1.0
            alias[index] = index

        # Zero-mass outcomes must never be returned from their own column.
        prob[self.probabilities == 0] = 0.0

        self._prob = prob
        self._alias = alias

    def __len__(self) -> int:
        return len(self._prob)

    def draw(self, rng: numpy.random.Generator, size) -> numpy.ndarray:
        columns = rng.integers(0, len(self._prob), size = size)
        keep = rng.random(size = size) < self._prob[columns]
        return numpy.where(keep, columns, self._alias[columns])

    @property
    def support(self) -> numpy.ndarray:
        return numpy.flatnonzero(self.probabilities > 0)
