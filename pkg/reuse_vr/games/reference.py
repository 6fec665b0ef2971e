from __future__ import annotations

import numpy

from reuse_vr.errors import ConvergenceError

from .. import games


def extragradient_reference(game: games.CompositeGame, setup: games.GameSetup, z, alpha: float, settings = None) -> numpy.ndarray:
    """
    The sub-problem solution z_alpha by deterministic mirror-prox, to ``reference_tolerance``.

    z_alpha satisfies <g(z_alpha) + alpha grad V_z(z_alpha), z_alpha - u> <= 0 for all feasible u.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    games_settings = settings.games
    z = numpy.asarray(z, dtype = float)
    lipschitz = game.spectral + max(game.phi.smoothness, game.psi.smoothness)
    step = 1 / (2 * lipschitz) if lipschitz > 0 else 1 / alpha
    fixed = [(step * alpha, step * alpha, z)]

    if game.psi.entropy:
        fixed.append((0.0, step * game.psi.entropy, setup.uniform_centre()))

    def mapping(w):
        return setup.join(*game.smooth_mapping(*setup.split(w)))

    tolerance = games_settings.reference_tolerance * min(1.0, step * alpha)
    w = setup.project(z)
    change = float('inf')

    for _ in range(games_settings.reference_max_iterations):
        terms = fixed + [(1.0, 1.0, w)]
        half = setup.mirror_step(step * mapping(w), terms, games_settings.simplex_floor)
        following = setup.mirror_step(step * mapping(half), terms, games_settings.simplex_floor)
        change = float(numpy.abs(following - w).max())
        w = following

        if change <= tolerance:
            return w

    raise ConvergenceError('mirror-prox', games_settings.reference_max_iterations, change, tolerance)
