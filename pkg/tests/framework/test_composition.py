import numpy
import pytest

from reuse_vr.diagnostics import sticky_coin_contract, sticky_coin_post
from reuse_vr.errors import LoopConfigurationError
from reuse_vr.framework import simulate_composition
from reuse_vr.randomness import RandomStreams


def test_fixed_seed_is_replayed():
    contract = sticky_coin_contract()
    seed = contract.seed_spec.draw(None, numpy.random.default_rng(0))
    totals = [
        simulate_composition(numpy.zeros(1), contract, sticky_coin_post, 4, RandomStreams(run), seed = seed)[0]
        for run
        in range(400)
        ]
    bit = float(seed.records[0])

    # Each step repeats the seed's bit with probability 3/4.
    assert numpy.mean(totals) == pytest.approx(4 * (0.75 * bit + 0.25 * (1 - bit)), abs = 0.2)


def test_fresh_seeds_average_out():
    contract = sticky_coin_contract()
    totals = [simulate_composition(numpy.zeros(1), contract, sticky_coin_post, 4, RandomStreams(run))[0] for run in range(400)]

    assert numpy.mean(totals) == pytest.approx(2.0, abs = 0.2)


def test_depth_must_be_positive():
    with pytest.raises(LoopConfigurationError):
        simulate_composition(numpy.zeros(1), sticky_coin_contract(), sticky_coin_post, 0, RandomStreams(0))
