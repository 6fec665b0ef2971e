import numpy
import pytest

from reuse_vr.errors import DegenerateNoiseError, LoopConfigurationError
from reuse_vr.framework import (
    LoopType,
    NoiseConfig,
    OuterConfig,
    OuterProblem,
    SeedSpec,
    SubSolverContract,
    last_iterate_weights,
    run_outer,
    uniform_weights,
    )
from reuse_vr.oracles import ComponentOracle
from reuse_vr.tracers import FullTracer

N = 4
T = 3


class Lines:
    n = N
    dim = 1

    def gradient(self, x):
        return x

    def component_gradient(self, index, x):
        return x - index


def draw_indices(bundle, rng, length):
    return bundle.charge('component', rng.integers(0, N, size = length))


def average_of_seed(u, seed, rng):
    return numpy.array([seed.records.mean()])


@pytest.fixture
def contract():
    return SubSolverContract(
        name = 'seed-average',
        seed_spec = SeedSpec(dist_id = 'uniform[4]', length = T, draw_records = draw_indices),
        solve = average_of_seed,
        )


@pytest.fixture
def problem():
    return OuterProblem(u0 = numpy.zeros(1), bundle = ComponentOracle(Lines()), name = 'lines')


def keep_half(u, half):
    return half


def config(loop_type, n_outer = 5, tau = 0.1, **kwargs):
    return OuterConfig(loop_type = loop_type, n_outer = n_outer, weights = uniform_weights(n_outer), noise = NoiseConfig(tau = tau), master_seed = 7, **kwargs)


def test_standard_draws_one_seed_per_iteration(problem, contract):
    record = run_outer(problem, contract, keep_half, config(LoopType.STANDARD))

    assert record.distinct_seeds == 5
    assert record.ledger.sample == 5 * T


def test_reuse_draws_one_seed(problem, contract):
    record = run_outer(problem, contract, keep_half, config(LoopType.REUSE))

    assert record.distinct_seeds == 1
    assert record.ledger.sample == T
    assert record.channels['component'].sample == T


def test_sample_counts_differ_by_the_number_of_iterations(contract):
    records = {
        loop_type: run_outer(OuterProblem(numpy.zeros(1), ComponentOracle(Lines())), contract, keep_half, config(loop_type, n_outer = 6))
        for loop_type
        in (LoopType.STANDARD, LoopType.REUSE)
        }

    assert records[LoopType.STANDARD].ledger.sample == 6 * records[LoopType.REUSE].ledger.sample


def test_reuse_iterates_only_differ_by_noise(problem, contract):
    record = run_outer(problem, contract, keep_half, config(LoopType.REUSE, tau = 0.1))
    iterates = numpy.array(record.iterates).ravel()

    assert iterates.max() - iterates.min() <= 0.2


def test_standard_adds_no_noise(problem, contract):
    record = run_outer(problem, contract, keep_half, config(LoopType.STANDARD))

    for iterate in record.iterates:
        assert (iterate * T) == pytest.approx(numpy.round(iterate * T))


def test_output_is_the_weighted_combination(problem, contract):
    cfg = OuterConfig(loop_type = LoopType.NOISY, n_outer = 3, weights = last_iterate_weights(3), noise = NoiseConfig(tau = 0.5))
    record = run_outer(problem, contract, keep_half, cfg)

    assert record.output.tolist() == record.iterates[-1].tolist()


def test_runs_are_replayable(contract):
    first = run_outer(OuterProblem(numpy.zeros(1), ComponentOracle(Lines())), contract, keep_half, config(LoopType.NOISY))
    second = run_outer(OuterProblem(numpy.zeros(1), ComponentOracle(Lines())), contract, keep_half, config(LoopType.NOISY))

    assert first.output.tolist() == second.output.tolist()
    assert first.seeds_used == second.seeds_used


@pytest.mark.parametrize("loop_type", [LoopType.NOISY, LoopType.REUSE])
def test_zero_noise_is_refused(problem, contract, loop_type):
    with pytest.raises(DegenerateNoiseError):
        run_outer(problem, contract, keep_half, config(loop_type, tau = 0.0))


def test_zero_noise_can_be_allowed(problem, contract):
    record = run_outer(problem, contract, keep_half, config(LoopType.REUSE, tau = 0.0, allow_zero_noise = True))

    assert len(set(float(iterate[0]) for iterate in record.iterates)) == 1


@pytest.mark.parametrize("n_outer, weights", [(0, []), (2, [0.5, 0.6]), (2, [1.0])])
def test_invalid_configurations(n_outer, weights):
    with pytest.raises(LoopConfigurationError):
        OuterConfig(loop_type = 'reuse', n_outer = n_outer, weights = weights, noise = NoiseConfig(tau = 0.1))


def test_tracer_records_every_iteration(problem, contract):
    tracer = FullTracer()
    run_outer(problem, contract, keep_half, config(LoopType.STANDARD, n_outer = 2), tracer)

    assert len(tracer.trees) == 2
    assert [child.name for child in tracer.trees[0].children] == ['sub_solve', 'post_process']
    assert tracer.trees[1].ledger_delta().sample == T


def test_record_serializes(problem, contract):
    record = run_outer(problem, contract, keep_half, config(LoopType.REUSE, n_outer = 2))
    data = record.to_dict(with_iterates = True)

    assert data['config']['loop_type'] == 'reuse'
    assert data['ledger']['sample'] == T
    assert len(data['iterates']) == 2
