from __future__ import annotations

import typing

import numpy

from .. import games


def project(setup: games.GameSetup, z_raw) -> numpy.ndarray:
    """
    Radial clipping of the ball factors and Euclidean projection of the simplex factor.

    >>> project(games.GameSetup('ball_ball', 2, 0), [3.0, 4.0]).round(12).tolist()
    [0.6, 0.8]
    """
    return setup.project(z_raw)


def gradient_mapping(game: games.CompositeGame, z, bundle = None) -> numpy.ndarray:
    """
    g(z) = (A^T y + grad phi(x), -A x + grad psi(y)); one batch query when ``bundle`` is given.

    >>> gradient_mapping(games.CompositeGame([[1.0]]), [1.0, 1.0]).tolist()
    [1.0, -1.0]
    """
    z = numpy.asarray(z, dtype = float)
    x, y = z[:game.n], z[game.n:]
    products: typing.Optional[tuple] = bundle.batch_query(z) if bundle is not None else None
    ax, aty = products if products is not None else (game.matrix @ x, game.matrix.T @ y)
    return numpy.concatenate([aty + game.phi.gradient(x), -ax + game.psi.gradient(y)])


def bregman(setup: games.GameSetup, z, z_prime) -> float:
    return setup.bregman(z, z_prime)
