import numpy
import pytest

from reuse_vr import fsm
from reuse_vr.errors import ParameterRangeError, SeedTooShortError
from reuse_vr.oracles import ComponentOracle


def test_schedule_constants(scalar_ridge):
    schedule = fsm.svrg_schedule(scalar_ridge, 2.0, 100.0, 0.01)

    # L_eff = max L_i + lambda = 4 + 2, strong convexity mu + lambda = 4.
    assert schedule.smoothness == 6.0
    assert schedule.step == pytest.approx(1 / 48)
    assert schedule.epoch_length == 24
    assert schedule.n_epochs == 15
    assert schedule.length == 360


def test_schedule_importance_weights(scalar_ridge):
    probabilities = numpy.array([0.25, 0.5, 0.25])
    schedule = fsm.svrg_schedule(scalar_ridge, 2.0, 100.0, 0.01, probabilities)

    # L_i / (n p_i) = 4/3 for every component.
    assert schedule.smoothness == pytest.approx(4 / 3 + 2)


def test_schedule_rejects_bad_delta(scalar_ridge):
    with pytest.raises(ParameterRangeError):
        fsm.svrg_schedule(scalar_ridge, 2.0, 100.0, 1.0)


def test_nonuniform_seed_probabilities(scalar_ridge):
    spec = fsm.nonuniform_seed_spec(scalar_ridge, length = 5)

    assert spec.dist_id == 'sqrt-smoothness[3]'
    assert spec.probabilities.tolist() == pytest.approx([0.25, 0.5, 0.25])


def test_seed_draw_is_charged(scalar_ridge):
    bundle = ComponentOracle(scalar_ridge)
    seed = fsm.uniform_seed_spec(scalar_ridge, 7).draw(bundle, numpy.random.default_rng(0))

    assert len(seed) == 7
    assert bundle.snapshot().sample == 7
    assert set(seed.records.tolist()) <= {0, 1, 2}


def test_reference_subsolve(scalar_ridge):
    # F'(x) = 2x - 1, so F + |x - 1|^2 is minimal at 3/4.
    result = fsm.reference_subsolve(scalar_ridge, [1.0], 2.0)

    assert result == pytest.approx([0.75])
    assert fsm.exact_minimizer(scalar_ridge) == pytest.approx([0.5])


def test_run_svrg_reaches_reference(scalar_ridge):
    bundle = ComponentOracle(scalar_ridge)
    schedule = fsm.svrg_schedule(scalar_ridge, 2.0, 100.0, 0.01)
    seed = fsm.uniform_seed_spec(scalar_ridge, schedule.length).draw(bundle, numpy.random.default_rng(1))
    probabilities = numpy.full(3, 1 / 3)

    result = fsm.run_svrg(bundle, numpy.array([1.0]), 2.0, seed.records, probabilities, schedule)

    assert result == pytest.approx([0.75], abs = 1e-3)
    assert bundle.snapshot().batch == schedule.n_epochs


def test_svrg_is_deterministic_given_the_seed(ridge):
    schedule = fsm.svrg_schedule(ridge, ridge.mu, 10.0, 0.1)
    probabilities = numpy.full(ridge.n, 1 / ridge.n)
    records = fsm.uniform_seed_spec(ridge, schedule.length).draw(ComponentOracle(ridge), numpy.random.default_rng(2)).records
    y = numpy.ones(ridge.dim)

    first = fsm.run_svrg(ComponentOracle(ridge), y, ridge.mu, records, probabilities, schedule)
    second = fsm.run_svrg(ComponentOracle(ridge), y, ridge.mu, records, probabilities, schedule)

    assert numpy.array_equal(first, second)


def test_short_seed_is_rejected(scalar_ridge):
    bundle = ComponentOracle(scalar_ridge)
    state = fsm.AppState(x = numpy.ones(1), v = numpy.ones(1), lam = 2.0, mu = 2.0)
    seed = fsm.uniform_seed_spec(scalar_ridge, 10).draw(bundle, numpy.random.default_rng(0))

    with pytest.raises(SeedTooShortError) as error:
        fsm.svrg_subsolve(scalar_ridge, bundle, state, seed, 2.0, 100.0, 0.01)

    assert error.value.required == 360
    assert error.value.available == 10


def test_high_precision_accuracy():
    assert fsm.high_precision_accuracy(10.0, 2.0, 2.0) == 10.0
    assert fsm.high_precision_accuracy(10.0, 0.1, 0.1) == pytest.approx(100.0)


@pytest.mark.parametrize('mu, lam', [(0.1, 0.1), (2.0, 2.0), (0.5, 3.0)])
def test_high_precision_accuracy_bounds_the_squared_distance(mu, lam):
    accuracy = fsm.high_precision_accuracy(10.0, mu, lam)
    # On (mu + lam) / 2 |x|^2, a relative gap of 1 / accuracy puts x at this squared distance.
    distance = 2 / (accuracy * (mu + lam))

    assert accuracy >= 10.0
    assert distance <= 1 / 10.0 + 1e-12


@pytest.mark.parametrize('c, delta', [(100.0, 0.01), (10.0, 0.1), (1e4, 1e-6), (0.5, 0.2)])
def test_epoch_count_bounds_the_failure_probability(scalar_ridge, settings, c, delta):
    schedule = fsm.svrg_schedule(scalar_ridge, 2.0, c, delta, settings = settings)
    multiplier = settings.fsm.svrg_epoch_multiplier

    assert max(c, 1.0) * 2 ** (-(schedule.n_epochs - 1) / multiplier) <= delta * (1 + 1e-12)
