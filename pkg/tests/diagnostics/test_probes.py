import numpy
import pytest

from reuse_vr import diagnostics
from reuse_vr.errors import BinningError, MissingOracleError, ParameterRangeError
from reuse_vr.framework import SubSolverContract


@pytest.fixture
def coin():
    return diagnostics.sticky_coin_contract()


def test_sticky_coin_exact_distances():
    assert diagnostics.enumerate_sticky_coin_tv(2) == pytest.approx(0.125)
    assert diagnostics.enumerate_sticky_coin_tv(3) == pytest.approx(0.1875)

    with pytest.raises(ParameterRangeError):
        diagnostics.enumerate_sticky_coin_tv(0)


def test_noise_free_probe_separates_bits_from_the_target(coin, fast_settings):
    report = diagnostics.pseudoindependence_probe(coin, [0.0], 0.0, 3, 200, settings = fast_settings)

    assert report.eps == 0.0
    assert [estimate.point_estimate for estimate in report.estimates] == [1.0, 1.0, 1.0]
    assert report.delta_hat == 1.0
    assert len(set(report.seeds)) == 3


def test_seed_independent_solver_passes(coin, fast_settings):
    exact = SubSolverContract(
        name = 'exact',
        seed_spec = coin.seed_spec,
        solve = lambda u, seed, rng: numpy.array([0.5]),
        target = coin.target,
        eta = 0.0,
        )

    report = diagnostics.pseudoindependence_probe(exact, [0.0], 0.5, 4, 500, eps = 0.05, settings = fast_settings)

    assert report.delta_hat == 0.0
    assert report.to_dict()['seeds'][0]['seed'] == 'bit#0'


def test_default_eps_is_the_smoothing_bound(coin, fast_settings):
    report = diagnostics.pseudoindependence_probe(coin, [0.0], 0.5, 1, 50, settings = fast_settings)

    assert report.eps == pytest.approx(0.25)


def test_probe_needs_a_target(coin):
    blind = SubSolverContract(name = 'blind', seed_spec = coin.seed_spec, solve = coin.solve)

    with pytest.raises(MissingOracleError):
        diagnostics.pseudoindependence_probe(blind, [0.0], 0.5, 1, 10)


def test_probe_rejects_negative_noise(coin):
    with pytest.raises(ParameterRangeError):
        diagnostics.pseudoindependence_probe(coin, [0.0], -0.1, 1, 10)


def test_probe_refuses_wide_outputs(coin):
    wide = SubSolverContract(name = 'wide', seed_spec = coin.seed_spec, solve = coin.solve, target = lambda u: numpy.zeros(3))

    with pytest.raises(BinningError):
        diagnostics.pseudoindependence_probe(wide, [0.0], 0.5, 1, 10)


def test_composition_of_the_sticky_coin(coin, fast_settings):
    report = diagnostics.composition_probe(
        coin, diagnostics.sticky_coin_post, [0.0], 2, 6000, 0.25, 0.0, settings = fast_settings,
        )

    assert report.estimate.point_estimate == pytest.approx(0.125, abs = 0.03)
    assert report.bound == 1.0
    assert report.holds
    assert report.to_dict()['T'] == 2


def test_composition_refuses_wide_states(coin):
    with pytest.raises(BinningError):
        diagnostics.composition_probe(coin, diagnostics.sticky_coin_post, numpy.zeros(3), 2, 10, 0.25, 0.0)
