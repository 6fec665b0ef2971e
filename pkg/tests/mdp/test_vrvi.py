import numpy
import pytest

from reuse_vr import mdp
from reuse_vr.errors import ParameterRangeError, SeedTooShortError
from reuse_vr.oracles import SimulatorOracle


def test_schedule(fast_settings):
    schedule = mdp.vrvi_schedule(6, 0.5, 0.01, 0.1, 10.0, fast_settings)

    assert schedule.n_epochs == 10
    assert schedule.iterations == 3
    assert schedule.length == schedule.n_epochs * schedule.iterations * schedule.samples
    assert schedule.sample_queries == 6 * schedule.length


@pytest.mark.parametrize('gamma_prime, accuracy', [(1.0, 0.1), (0.5, 0.0)])
def test_schedule_ranges(gamma_prime, accuracy):
    with pytest.raises(ParameterRangeError):
        mdp.vrvi_schedule(6, gamma_prime, accuracy, 0.1, 10.0)


def test_seed_rows_hold_one_successor_per_pair(chain):
    bundle = SimulatorOracle(chain.transitions)
    seed = mdp.vrvi_seed_spec(chain, 4).draw(bundle, numpy.random.default_rng(0))

    assert seed.records.shape == (4, 6)
    assert seed.records[0].tolist() == [1, 0, 2, 1, 2, 2]
    assert bundle.snapshot().sample == 24
    assert bundle.snapshot().distinct == 6


def test_subsolve_approaches_from_below(chain):
    values, _ = mdp.exact_solve(chain)
    bundle = SimulatorOracle(chain.transitions)
    schedule = mdp.vrvi_schedule(6, 0.5, 0.05, 0.1, chain.value_bound)
    seed = mdp.vrvi_seed_spec(chain, schedule.length).draw(bundle, numpy.random.default_rng(1))

    result = mdp.vrvi_subsolve(chain, bundle, 0.5, values, 0.1, 0.1, seed, chain.value_bound)

    assert numpy.abs(result - values).max() <= 0.05
    assert (result <= values + 1e-9).all()


def test_policy_subsolve_certifies_its_policy(two_state):
    values, _ = mdp.exact_solve(two_state)
    bundle = SimulatorOracle(two_state.transitions)
    schedule = mdp.vrvi_schedule(3, 0.4, 0.05, 0.1, two_state.value_bound)
    seed = mdp.vrvi_seed_spec(two_state, schedule.length).draw(bundle, numpy.random.default_rng(2))

    lower, policy = mdp.vrvi_policy_subsolve(two_state, bundle, 0.4, values, 0.1, 0.1, seed, two_state.value_bound)
    rewards = mdp.sub_reward(two_state, 0.4, values)

    assert policy.to_list() == [1, 0]
    assert (lower <= mdp.policy_value(two_state, policy, 0.4, rewards) + 1e-9).all()


def test_short_seed(chain):
    bundle = SimulatorOracle(chain.transitions)
    seed = mdp.vrvi_seed_spec(chain, 2).draw(bundle, numpy.random.default_rng(0))

    with pytest.raises(SeedTooShortError):
        mdp.vrvi_subsolve(chain, bundle, 0.5, numpy.zeros(3), 0.1, 0.1, seed)
