import numpy
import pytest

from reuse_vr import fsm
from reuse_vr.errors import ParameterRangeError
from reuse_vr.framework import LoopType


def relative_gap(problem, record):
    f_star = problem.value(fsm.exact_minimizer(problem))
    x0 = numpy.zeros(problem.dim)
    return (problem.value(fsm.app_solution(record)) - f_star) / (problem.value(x0) - f_star)


@pytest.fixture
def runs(scalar_ridge):
    return {
        mode: fsm.app_solve(scalar_ridge, [0.0], 10.0, 2.0, 0.1, mode = mode, master_seed = 7)
        for mode in (LoopType.STANDARD, LoopType.REUSE)
        }


def test_plan(scalar_ridge):
    plan = fsm.app_plan(scalar_ridge, 1.0, 10.0, 2.0, 0.1)

    assert plan.rho == 3.0
    assert plan.n_outer == 9
    assert plan.reuse.delta_sub == pytest.approx(0.1 / (5 * 81))
    assert plan.tau == pytest.approx(plan.reuse.eta_prime / (2 * plan.reuse.delta_sub))
    assert plan.seed_length == plan.schedule.length


@pytest.mark.parametrize('c, lam', [(1.0, 2.0), (10.0, 1.0)])
def test_plan_rejects_parameters(scalar_ridge, c, lam):
    with pytest.raises(ParameterRangeError):
        fsm.app_plan(scalar_ridge, 1.0, c, lam, 0.1)


def test_app_state_round_trip():
    state = fsm.AppState(x = numpy.array([1.0, 2.0]), v = numpy.array([3.0, 4.0]), lam = 1.0, mu = 0.5)
    restored = fsm.AppState.unpack(state.pack(), 1.0, 0.5)

    assert restored.x.tolist() == [1.0, 2.0]
    assert restored.v.tolist() == [3.0, 4.0]


def test_reuse_saves_a_factor_n_outer_of_samples(runs):
    standard, reuse = runs[LoopType.STANDARD], runs[LoopType.REUSE]
    n_outer = reuse.config.n_outer

    assert standard.ledger.sample == n_outer * reuse.ledger.sample
    assert standard.ledger.batch == reuse.ledger.batch
    assert reuse.distinct_seeds == 1
    assert standard.distinct_seeds == n_outer


@pytest.mark.parametrize('mode', [LoopType.STANDARD, LoopType.REUSE])
def test_app_reaches_relative_accuracy(scalar_ridge, runs, mode):
    assert relative_gap(scalar_ridge, runs[mode]) <= 1 / 10


def test_app_is_reproducible(scalar_ridge, runs):
    again = fsm.app_solve(scalar_ridge, [0.0], 10.0, 2.0, 0.1, mode = LoopType.REUSE, master_seed = 7)

    assert numpy.array_equal(again.output, runs[LoopType.REUSE].output)
    assert again.ledger == runs[LoopType.REUSE].ledger


def test_nonuniform_seeds(scalar_ridge):
    record = fsm.app_solve(scalar_ridge, [0.0], 10.0, 2.0, 0.1, nonuniform = True)

    assert record.seeds_used[0].startswith('sqrt-smoothness[3]')
    assert relative_gap(scalar_ridge, record) <= 1 / 10


def test_ridge_in_two_dimensions(ridge):
    record = fsm.app_solve(ridge, numpy.zeros(2), 10.0, ridge.mu, 0.1)

    assert fsm.app_solution(record).shape == (2,)
    assert relative_gap(ridge, record) <= 1 / 10
