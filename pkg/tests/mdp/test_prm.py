import numpy
import pytest

from reuse_vr import mdp
from reuse_vr.errors import ParameterRangeError
from reuse_vr.framework import LoopType
from reuse_vr.warnings import DiscountClipWarning


@pytest.fixture
def sparse_mdp():
    return mdp.random_dmdp(4, 2, numpy.random.default_rng(5), successors = 2)


def test_plan(chain):
    plan = mdp.prm_plan(chain, 1.0, 0.5, 0.1)

    assert plan.eps_prime == pytest.approx(0.05)
    assert plan.n_outer == 19
    assert plan.reuse.delta_sub == pytest.approx(0.1 / (5 * 19 ** 2))
    assert plan.sub_accuracy == plan.reuse.eta_prime


@pytest.mark.parametrize('eps, gamma_prime', [(1.0, 0.9), (1.0, 0.95), (11.0, 0.5)])
def test_plan_ranges(chain, eps, gamma_prime):
    with pytest.raises(ParameterRangeError):
        mdp.prm_plan(chain, eps, gamma_prime, 0.1)


def test_post_process_lowers_and_clips():
    post = mdp.prm_post_process(0.5)

    assert post(None, numpy.array([2.0, 0.25])).tolist() == [1.5, 0.0]


@pytest.mark.parametrize('mode', [LoopType.STANDARD, LoopType.REUSE])
def test_exact_inner(chain, mode):
    v_star, _ = mdp.exact_solve(chain)
    values, policy, record = mdp.prm_solve(chain, 1.0, 0.5, mode = mode, exact_inner = True)

    assert policy.to_list() == [0, 0, 0]
    assert numpy.abs(values - v_star).max() <= 1.0
    assert record.ledger.sample == 0


def test_exact_inner_contracts_at_the_deterministic_rate():
    m = mdp.random_dmdp(10, 3, numpy.random.default_rng(11), gamma = 0.9)
    v_star, _ = mdp.exact_solve(m)
    plan = mdp.prm_plan(m, 0.5, 0.6, 0.1)
    _, _, record = mdp.prm_solve(m, 0.5, 0.6, mode = LoopType.STANDARD, exact_inner = True)
    rate = (0.9 - 0.6) / (1 - 0.6)
    ratio = (1 - 0.6) / (1 - 0.9)

    for t, v in enumerate(record.iterates, start = 1):
        assert (v_star - v).min() >= -1e-9
        assert (v_star - v).max() <= rate ** t * v_star.max() + ratio * plan.eps_prime + 1e-9


def test_vrvi_backed_run(chain):
    v_star, _ = mdp.exact_solve(chain)

    with pytest.warns(DiscountClipWarning):
        profile = mdp.runtime_profile(chain, 1.0)

    values, policy, record = mdp.prm_solve(chain, 1.0, profile.gamma_prime, master_seed = 3)

    assert profile.clipped
    assert policy.to_list() == [0, 0, 0]
    assert numpy.abs(values - v_star).max() <= 1.0
    assert record.plan['policy'] == [0, 0, 0]


@pytest.mark.parametrize('mode', [LoopType.STANDARD, LoopType.REUSE])
def test_profile_predicts_the_ledger(sparse_mdp, fast_settings, mode):
    profile = mdp.runtime_profile(sparse_mdp, 1.0, mode, settings = fast_settings)
    _, _, record = mdp.prm_solve(sparse_mdp, 1.0, profile.gamma_prime, mode = mode, settings = fast_settings)

    assert not profile.clipped
    assert profile.one_minus_gamma_prime == pytest.approx(numpy.sqrt(0.5))
    assert record.ledger.batch == profile.batch_queries
    assert record.ledger.sample == profile.sample_queries


def test_reuse_draws_two_seeds(sparse_mdp, fast_settings):
    standard = mdp.runtime_profile(sparse_mdp, 1.0, LoopType.STANDARD, settings = fast_settings)
    reuse = mdp.runtime_profile(sparse_mdp, 1.0, LoopType.REUSE, settings = fast_settings)

    assert standard.sample_queries == (standard.n_outer + 1) * standard.plan.schedule.sample_queries
    assert reuse.sample_queries == 2 * reuse.plan.schedule.sample_queries
    assert standard.batch_queries == reuse.batch_queries


@pytest.mark.parametrize('exact_inner', [True, False])
def test_final_policy_seed_stays_out_of_the_loop_seeds(chain, fast_settings, exact_inner):
    _, _, reuse = mdp.prm_solve(chain, 1.0, 0.5, mode = LoopType.REUSE, exact_inner = exact_inner, settings = fast_settings)
    _, _, standard = mdp.prm_solve(chain, 1.0, 0.5, mode = LoopType.STANDARD, exact_inner = exact_inner, settings = fast_settings)

    assert reuse.distinct_seeds == 1
    assert len(standard.seeds_used) == standard.config.n_outer
    assert standard.distinct_seeds == standard.config.n_outer
    assert reuse.plan['final_seed'] not in reuse.seeds_used
    assert standard.plan['final_seed'] not in standard.seeds_used


def test_amdp_discount():
    assert mdp.amdp_discount(0.9, 1.0) == pytest.approx(0.9)

    with pytest.raises(ParameterRangeError):
        mdp.amdp_discount(9.0, 1.0)


def test_amdp_prefers_the_higher_gain(two_state):
    policy, record = mdp.amdp_solve(two_state, 0.9, 1.0, exact_inner = True)

    assert policy.to_list() == [1, 0]
    assert mdp.average_reward(two_state, policy) == pytest.approx(0.8)
    assert record.plan['amdp']['gamma'] == pytest.approx(0.9)
