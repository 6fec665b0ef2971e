import json

import numpy
import pytest

from reuse_vr import mdp
from reuse_vr.errors import ParameterRangeError, PreconditionError, ProblemParsingError, ProblemValidationError


@pytest.fixture
def layout():
    return {
        'states': 2,
        'actions': [['left', 'right'], ['stay']],
        'transitions': [
            {'s': 0, 'a': 'left', 'probs': [[0, 0.5], [1, 0.5]]},
            {'s': 0, 'a': 'right', 'probs': [[1, 1.0]]},
            {'s': 1, 'a': 'stay', 'probs': [[0, 1.0]]},
            ],
        'rewards': [0.2, 0.6, 1.0],
        'gamma': 0.8,
        }


def test_shape(two_state):
    assert two_state.n_states == 2
    assert two_state.n_pairs == 3
    assert two_state.nnz == 4
    assert two_state.action_counts.tolist() == [2, 1]
    assert two_state.value_bound == pytest.approx(5.0)


def test_substochastic_row():
    with pytest.raises(ProblemValidationError) as error:
        mdp.Dmdp.from_dense([[0.5, 0.49], [0.0, 1.0]], [0.0, 0.0], 0.8, [1, 1])

    assert error.value.violations[0][0] == ['transitions', 'stochastic']


def test_reward_above_one():
    with pytest.raises(ProblemValidationError) as error:
        mdp.Dmdp.from_dense([[1.0]], [1.5], 0.8, [1])

    assert error.value.violations[0][0] == ['rewards']


def test_sub_problems_accept_large_rewards(single_state):
    assert single_state.with_rewards([3.0, 2.0]).rewards.tolist() == [3.0, 2.0]


def test_with_gamma_range(single_state):
    with pytest.raises(ParameterRangeError):
        single_state.with_gamma(1.0)


def test_greedy_ties_go_to_the_lowest_action():
    m = mdp.Dmdp.from_dense([[1.0], [1.0]], [1.0, 1.0], 0.5, [2])
    values, policy = mdp.bellman_apply(m, [0.0])

    assert values.tolist() == [1.0]
    assert policy.to_list() == [0]


def test_exact_solve_single_state(single_state):
    values, policy = mdp.exact_solve(single_state)

    assert values == pytest.approx([2.0])
    assert policy.to_list() == [0]


def test_exact_solve_two_states(two_state):
    values, policy = mdp.exact_solve(two_state)

    assert values == pytest.approx([35 / 9, 37 / 9])
    assert policy.to_list() == [1, 0]
    assert mdp.policy_value(two_state, policy) == pytest.approx(values)


def test_exact_solve_chain(chain):
    values, policy = mdp.exact_solve(chain)

    assert values == pytest.approx([8.1, 9.0, 10.0])
    assert policy.to_list() == [0, 0, 0]


def test_average_reward(two_state):
    assert mdp.average_reward(two_state, mdp.Policy([1, 0])) == pytest.approx(0.8)
    assert mdp.average_reward(two_state, mdp.Policy([0, 0])) == pytest.approx(7 / 15)


def test_sub_reward_keeps_the_fixed_point(chain):
    values, _ = mdp.exact_solve(chain)
    rewards = mdp.sub_reward(chain, 0.5, values)
    sub_values, _ = mdp.exact_solve(chain, 0.5, rewards)

    assert sub_values == pytest.approx(values)


def test_reward_stability(chain):
    record = mdp.reward_stability_check(chain, chain.rewards, 0.5 * chain.rewards)

    assert record.holds
    assert record.bound == pytest.approx(5.0)
    assert record.difference == pytest.approx([4.05, 4.5, 5.0])


def test_reward_stability_needs_lower_rewards(chain):
    with pytest.raises(PreconditionError):
        mdp.reward_stability_check(chain, chain.rewards, chain.rewards + 0.1)


def test_read_layout(layout):
    m = mdp.read_dmdp(layout)

    assert m.action_labels == (('left', 'right'), ('stay',))
    assert mdp.dump_dmdp(m) == layout


def test_read_reports_every_violation(layout):
    layout['transitions'][1]['a'] = 'up'
    layout['transitions'][2]['s'] = 5

    with pytest.raises(ProblemValidationError) as error:
        mdp.read_dmdp(layout, 'bad.json')

    locations = [path for path, _ in error.value.violations]

    assert ['bad.json', 'transitions', 1, 'a'] in locations
    assert ['bad.json', 'transitions', 2, 's'] in locations
    assert ['bad.json', 'transitions', 'missing'] in locations


def test_load(layout, tmp_path):
    path = tmp_path / 'two.json'
    path.write_text(json.dumps(layout))

    assert mdp.load_dmdp(str(path)).n_pairs == 3


def test_load_broken_file(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text("{'states'")

    with pytest.raises(ProblemParsingError):
        mdp.load_dmdp(str(path))


def test_random_dmdp_is_valid():
    m = mdp.random_dmdp(5, 3, numpy.random.default_rng(0), successors = 2)

    assert m.n_pairs == 15
    assert m.nnz == 30


@pytest.fixture(params = range(5))
def random_mdp(request):
    return mdp.random_dmdp(6, 3, numpy.random.default_rng(request.param), gamma = 0.9, successors = 3)


def test_bellman_contracts(random_mdp):
    rng = numpy.random.default_rng(100)

    for _ in range(200):
        v, w = rng.normal(scale = 5.0, size = (2, random_mdp.n_states))
        tv, _ = mdp.bellman_apply(random_mdp, v)
        tw, _ = mdp.bellman_apply(random_mdp, w)

        assert numpy.abs(tv - tw).max() <= random_mdp.gamma * numpy.abs(v - w).max() + 1e-12


def test_bellman_is_monotone(random_mdp):
    rng = numpy.random.default_rng(101)

    for _ in range(200):
        v = rng.normal(scale = 5.0, size = random_mdp.n_states)
        w = v + rng.exponential(size = random_mdp.n_states)
        tv, _ = mdp.bellman_apply(random_mdp, v)
        tw, _ = mdp.bellman_apply(random_mdp, w)

        assert (tw >= tv - 1e-12).all()


@pytest.mark.parametrize('gamma_prime', [0.3, 0.6, 0.89])
def test_sub_reward_dominates_the_reward(random_mdp, gamma_prime):
    rng = numpy.random.default_rng(102)

    for _ in range(50):
        v = rng.uniform(0, random_mdp.value_bound, size = random_mdp.n_states)

        assert (mdp.sub_reward(random_mdp, gamma_prime, v) >= random_mdp.rewards).all()


def test_reward_stability_over_random_lowerings(random_mdp):
    rng = numpy.random.default_rng(103)

    for _ in range(10):
        r_low = random_mdp.rewards * rng.random(random_mdp.n_pairs)
        record = mdp.reward_stability_check(random_mdp, random_mdp.rewards, r_low)

        assert record.holds
        assert record.difference.min() >= -1e-9
        assert record.difference.max() <= record.bound + 1e-9
