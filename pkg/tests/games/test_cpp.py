import json

import numpy
import pytest

from reuse_vr import games
from reuse_vr.errors import ParameterRangeError, ProblemParsingError, ProblemValidationError
from reuse_vr.framework import LoopType
from reuse_vr.oracles import MatrixOracle


@pytest.fixture
def tilted_game():
    game = games.CompositeGame([[1.0]], phi = {'kind': 'linear', 'vector': [0.5]})
    return game, games.GameSetup.for_game(game, 'ball_ball')


@pytest.fixture
def runs(tilted_game):
    game, setup = tilted_game
    return {
        mode: games.cpp_solve(game, setup, 0.2, mode = mode, master_seed = 4)[1]
        for mode in (LoopType.STANDARD, LoopType.REUSE)
        }


def test_default_alpha():
    game = games.CompositeGame([[8.0]])

    assert games.default_alpha(game, 1.0) == pytest.approx(4.0)


def test_plan(tilted_game):
    game, setup = tilted_game
    plan = games.cpp_plan(game, setup, 0.2, games.default_alpha(game, 0.2), 0.1)

    assert plan.n_outer == 6
    assert plan.schedule.accuracy == plan.reuse.eta_prime
    assert plan.eps_prime < 0.2


def test_plan_ranges(tilted_game):
    game, setup = tilted_game

    with pytest.raises(ParameterRangeError):
        games.cpp_plan(game, setup, 0.2, 0.0, 0.1)


@pytest.mark.parametrize('mode', [LoopType.STANDARD, LoopType.REUSE])
def test_gap(runs, mode):
    assert runs[mode].plan['gap'] <= 0.2


def test_reuse_saves_a_factor_n_outer_of_samples(runs):
    standard, reuse = runs[LoopType.STANDARD], runs[LoopType.REUSE]

    assert standard.ledger.sample == reuse.config.n_outer * reuse.ledger.sample
    assert standard.ledger.batch == reuse.ledger.batch


def test_post_process_stays_feasible(small_game):
    game, setup = small_game
    post = games.cpp_post_process(game, setup, MatrixOracle(game.matrix), 1.0)
    z = post(setup.initial_point(), [2.0, 0.0, 0.9, 0.3])
    x, y = setup.split(z)

    assert numpy.linalg.norm(x) <= 1 + 1e-12
    assert y.sum() == pytest.approx(1.0)
    assert (y > 0).all()


def test_read_game_reports_violations():
    with pytest.raises(ProblemValidationError) as error:
        games.read_game([[1.0]], {'domain': 'torus', 'alpha': -1}, 'game.json')

    locations = [path for path, _ in error.value.violations]

    assert ['game.json', 'domain'] in locations
    assert ['game.json', 'alpha'] in locations


def test_read_game_rejects_ball_entropy():
    with pytest.raises(ProblemValidationError) as error:
        games.read_game([[1.0]], {'psi': {'kind': 'entropy', 'coefficient': 1.0}})

    assert error.value.violations[0][0] == ['<game>', 'terms']


def test_load_game(tmp_path):
    matrix = tmp_path / 'A.csv'
    config = tmp_path / 'game.json'
    matrix.write_text("1,-0.5\n0,1\n")
    config.write_text(json.dumps({'domain': 'ball_simplex', 'eps': 0.1}))

    game, setup, loaded = games.load_game(str(matrix), str(config))

    assert (game.m, game.n) == (2, 2)
    assert setup.domain is games.Domain.BALL_SIMPLEX
    assert loaded['eps'] == 0.1


def test_load_game_broken_matrix(tmp_path):
    matrix = tmp_path / 'A.csv'
    matrix.write_text("1,a\n")

    with pytest.raises(ProblemParsingError):
        games.load_game(str(matrix))
