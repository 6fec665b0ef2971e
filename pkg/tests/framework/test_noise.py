import numpy
import pytest

from reuse_vr.errors import NonFiniteError, ParameterRangeError
from reuse_vr.framework import NoiseConfig, SeedSpec, SubSolverContract, add_noise, noisy


def test_continuous_noise_stays_within_tau():
    rng = numpy.random.default_rng(0)
    values = numpy.array([add_noise([1.0, -1.0], NoiseConfig(tau = 0.25), rng) for _ in range(500)])

    assert (numpy.abs(values - [1.0, -1.0]) <= 0.25).all()
    assert values[:, 0].std() > 0.1


def test_grid_noise_lands_on_the_grid():
    rng = numpy.random.default_rng(0)
    cfg = NoiseConfig(tau = 0.3, mode = 'grid', beta = 0.1)
    values = numpy.array([add_noise([0.47], cfg, rng)[0] for _ in range(200)])

    assert numpy.allclose(values / 0.1, numpy.round(values / 0.1))
    assert values.min() == pytest.approx(0.1)
    assert values.max() == pytest.approx(0.7)


def test_non_finite_inputs_are_rejected():
    with pytest.raises(NonFiniteError):
        add_noise([numpy.nan], NoiseConfig(tau = 0.1), numpy.random.default_rng(0))


@pytest.mark.parametrize("tau, beta", [(0.1, None), (0.1, 0.2), (0.1, 0.0)])
def test_grid_pitch_range(tau, beta):
    with pytest.raises(ParameterRangeError):
        NoiseConfig(tau = tau, mode = 'grid', beta = beta)


def test_noisy_contract_widens_the_declared_accuracy():
    contract = SubSolverContract(
        name = 'constant',
        seed_spec = SeedSpec(dist_id = 'none', length = 0, draw_records = lambda bundle, rng, length: numpy.zeros(length)),
        solve = lambda u, seed, rng: numpy.array([2.0]),
        eta = 0.1,
        delta = 0.01,
        )
    wrapped = noisy(contract, NoiseConfig(tau = 0.5))
    seed = contract.seed_spec.draw(None, numpy.random.default_rng(0))
    output = wrapped.solve(numpy.zeros(1), seed, numpy.random.default_rng(1))

    assert wrapped.eta == pytest.approx(0.6)
    assert wrapped.delta == 0.01
    assert abs(output[0] - 2.0) <= 0.5
