from __future__ import annotations

from .. import games


def duality_gap(game: games.CompositeGame, setup: games.GameSetup, z) -> float:
    """
    max_y' f(x, y') - min_x' f(x', y) = phi(x) + psi*(A x) + psi(y) + phi*(-A^T y),
    with the conjugates taken over the feasible sets.

    >>> game = games.CompositeGame([[1.0]])
    >>> duality_gap(game, games.GameSetup('ball_ball', 1, 1), [0.0, 0.5])
    0.5
    """
    x, y = setup.split(z)
    best_response = game.psi.conjugate(game.matrix @ x, setup.domain.simplex)
    best_counter = game.phi.conjugate(-game.matrix.T @ y, False)
    gap = game.phi.value(x) + best_response + game.psi.value(y) + best_counter
    return max(gap, 0.0)
