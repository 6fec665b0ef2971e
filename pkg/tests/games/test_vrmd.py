import numpy
import pytest

from reuse_vr import games
from reuse_vr.errors import ParameterRangeError, SeedTooShortError
from reuse_vr.oracles import MatrixOracle


@pytest.fixture
def tilted_game():
    """f = y x + x / 2 on the unit balls: saddle point (0, -1/2)."""
    game = games.CompositeGame([[1.0]], phi = {'kind': 'linear', 'vector': [0.5]})
    return game, games.GameSetup.for_game(game, 'ball_ball')


def test_sample_dists():
    dists = games.sample_dists(games.CompositeGame([[1.0, 2.0], [3.0, 4.0]]))

    assert dists.row.probabilities.tolist() == pytest.approx([1 / 6, 5 / 6])
    assert dists.column.probabilities.tolist() == pytest.approx([1 / 3, 2 / 3])
    assert dists.entry[0].probabilities.tolist() == pytest.approx([0.2, 0.8])


def test_sample_dists_need_a_nonzero_matrix():
    with pytest.raises(ParameterRangeError):
        games.sample_dists(games.CompositeGame([[0.0]]))


def test_entry_seeds_skip_zero_rows():
    game = games.CompositeGame([[0.0, 0.0], [1.0, 1.0]])
    bundle = MatrixOracle(game.matrix)
    seed = games.entry_seed_spec(game, 5).draw(bundle, numpy.random.default_rng(0))

    assert (seed.records[:, 0] == -1).all()
    assert set(seed.records[:, 1].tolist()) <= {0, 1}
    assert bundle.snapshot().sample == 5
    assert bundle.channel_snapshots()['entry'].distinct <= 2


def test_row_column_seeds_are_charged_on_both_channels(small_game):
    game, _ = small_game
    bundle = MatrixOracle(game.matrix)
    seed = games.row_column_seed_spec(game, 6).draw(bundle, numpy.random.default_rng(0))

    assert seed.records.shape == (6, 2)
    assert bundle.channel_snapshots()['row'].sample == 6
    assert bundle.channel_snapshots()['column'].sample == 6


def test_schedule(tilted_game):
    game, setup = tilted_game
    schedule = games.vrmd_schedule(game, setup, 1.0, 0.01, 0.1)

    assert schedule.smoothness == 1.0
    assert schedule.step == pytest.approx(1 / 16)
    assert schedule.epoch_length == 64
    assert schedule.n_epochs == 9 + 4


def test_reference_solves_the_sub_problem(tilted_game):
    game, setup = tilted_game

    # x + y + 1/2 = 0 and y - x = 0.
    assert games.extragradient_reference(game, setup, [0.0, 0.0], 1.0) == pytest.approx([-0.25, -0.25], abs = 1e-8)


def test_vrmd2_matches_the_reference(tilted_game):
    game, setup = tilted_game
    bundle = MatrixOracle(game.matrix)
    schedule = games.vrmd_schedule(game, setup, 1.0, 0.01, 0.1)
    seed = games.row_column_seed_spec(game, schedule.length).draw(bundle, numpy.random.default_rng(0))

    z = games.vrmd2_subsolve(game, setup, bundle, [0.0, 0.0], 1.0, 0.01, 0.1, seed)

    assert z == pytest.approx([-0.25, -0.25], abs = 0.01)
    assert bundle.channel_snapshots()['entry'].sample == 0
    assert bundle.snapshot().batch == schedule.n_epochs


def test_vrmd1_matches_the_reference(small_game):
    game, setup = small_game
    bundle = MatrixOracle(game.matrix)
    z0 = setup.initial_point()
    schedule = games.vrmd_schedule(game, setup, 1.0, 0.01, 0.1)
    seed = games.entry_seed_spec(game, schedule.length).draw(bundle, numpy.random.default_rng(0))
    reference = games.extragradient_reference(game, setup, z0, 1.0)

    z = games.vrmd1_subsolve(game, setup, bundle, z0, 1.0, 0.01, 0.1, seed, numpy.random.default_rng(1))

    assert numpy.abs(z - reference).max() <= 0.05
    assert setup.split(z)[1].sum() == pytest.approx(1.0)


def test_vrmd_checks_the_domain(small_game):
    game, setup = small_game
    bundle = MatrixOracle(game.matrix)
    seed = games.row_column_seed_spec(game, 1).draw(bundle, numpy.random.default_rng(0))

    with pytest.raises(ParameterRangeError):
        games.vrmd2_subsolve(game, setup, bundle, setup.initial_point(), 1.0, 0.01, 0.1, seed)


def test_vrmd_checks_the_seed_length(tilted_game):
    game, setup = tilted_game
    bundle = MatrixOracle(game.matrix)
    seed = games.row_column_seed_spec(game, 3).draw(bundle, numpy.random.default_rng(0))

    with pytest.raises(SeedTooShortError):
        games.vrmd2_subsolve(game, setup, bundle, [0.0, 0.0], 1.0, 0.01, 0.1, seed)
