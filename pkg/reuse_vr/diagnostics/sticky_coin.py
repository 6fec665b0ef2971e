from __future__ import annotations

import numpy
import scipy.stats

from reuse_vr.errors import ParameterRangeError
from reuse_vr.framework import SeedSpec, SubSolverContract

KEEP = 0.5
CERTIFIED = (0.25, 0.0)


def _draw_bits(bundle, rng: numpy.random.Generator, length: int) -> numpy.ndarray:
    return rng.integers(0, 2, size = length)


def sticky_coin_contract() -> SubSolverContract:
    """
    One uniform bit per seed; the solver returns that bit with probability 1/2 and a fresh uniform
    bit otherwise. Certified (1/4, 0)-pseudo-independent.
    """

    def solve(u, seed, rng):
        bit = seed.records[0] if rng.random() < KEEP else rng.integers(0, 2)
        return numpy.array([float(bit)])

    return SubSolverContract(
        name = 'sticky-coin',
        seed_spec = SeedSpec(dist_id = 'bit', length = 1, draw_records = _draw_bits, probabilities = numpy.array([0.5, 0.5])),
        solve = solve,
        target = lambda u: numpy.array([0.5]),
        eta = CERTIFIED[0],
        delta = CERTIFIED[1],
        )


def sticky_coin_post(u, half) -> numpy.ndarray:
    return numpy.asarray(u, dtype = float) + numpy.asarray(half, dtype = float)


def enumerate_sticky_coin_tv(T: int) -> float:
    """
    Exact TV between the sums of T fresh-seed and T fixed-seed outputs of the sticky coin.

    Fresh sums are Binomial(T, 1/2); a fixed bit b repeats with probability 3/4 at every step.

    >>> [round(enumerate_sticky_coin_tv(T), 12) for T in (1, 2, 3)]
    [0.0, 0.125, 0.1875]
    """
    if T < 1:
        raise ParameterRangeError('T', T, 'T >= 1')

    repeat = KEEP + (1 - KEEP) / 2
    k = numpy.arange(T + 1)
    fresh = scipy.stats.binom.pmf(k, T, 0.5)
    fixed = 0.5 * (scipy.stats.binom.pmf(k, T, repeat) + scipy.stats.binom.pmf(k, T, 1 - repeat))
    return 0.5 * float(numpy.abs(fresh - fixed).sum())
