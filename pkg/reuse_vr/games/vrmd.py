from __future__ import annotations

import dataclasses
import logging
import math
import typing

import numpy

from reuse_vr.errors import ParameterRangeError, SeedTooShortError
from reuse_vr.oracles.matrix_oracle import ROW

from .. import games

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen = True)
class VrmdSchedule:
    step: float
    epoch_length: int
    n_epochs: int
    smoothness: float
    accuracy: float

    @property
    def length(self) -> int:
        return self.epoch_length * self.n_epochs

    def to_dict(self) -> dict:
        return {**dataclasses.asdict(self), 'length': self.length}


def vrmd_schedule(game: games.CompositeGame, setup: games.GameSetup, alpha: float, eps: float, delta: float, settings = None) -> VrmdSchedule:
    """
    Epochs of variance-reduced mirror descent reaching |z' - z_alpha|_inf <= ``eps``.

    The estimator's smoothness is |A|_F for ball-ball games and max_i |a_i| for ball-simplex games,
    plus the quadratic composite coefficients.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()

    if not alpha > 0:
        raise ParameterRangeError('alpha', alpha, 'alpha > 0')

    if not eps > 0 or not 0 < delta < 1:
        raise ParameterRangeError('(eps, delta)', (eps, delta), 'eps > 0 and 0 < delta < 1')

    coupling = float(game.row_norms.max()) if setup.domain.simplex else game.frobenius
    smoothness = max(coupling + max(game.phi.smoothness, game.psi.smoothness), alpha)
    games_settings = settings.games
    n_epochs = max(1, math.ceil(math.log2(max(setup.diameter / eps, 1.0))) + math.ceil(math.log2(1 / delta)))

    return VrmdSchedule(
        step = alpha / (games_settings.vrmd_step_constant * smoothness ** 2),
        epoch_length = math.ceil(games_settings.vrmd_epoch_constant * smoothness ** 2 / alpha ** 2),
        n_epochs = n_epochs,
        smoothness = smoothness,
        accuracy = eps,
        )


def _inverse(weights: numpy.ndarray) -> numpy.ndarray:
    """1 / P for P proportional to ``weights``, and 0 where P vanishes."""
    total = weights.sum()
    inverse = numpy.zeros_like(weights)
    support = weights > 0
    inverse[support] = total / weights[support]
    return inverse


def run_vrmd(
        game: games.CompositeGame,
        setup: games.GameSetup,
        bundle,
        z: numpy.ndarray,
        alpha: float,
        schedule: VrmdSchedule,
        epoch_estimator: typing.Callable,
        settings,
        ) -> numpy.ndarray:
    """
    Solve <g(w) + alpha grad V_z(w), w - u> <= 0 by epochs of stochastic mirror descent.

    Each epoch makes one batch query at its anchor w0 and estimates the bilinear part of
    g(w) - g(w0) with ``epoch_estimator(epoch)``; entropy terms are handled exactly by the
    mirror steps. An epoch returns the average of its iterates.
    """
    step = schedule.step
    entropy = game.psi.entropy
    terms = [(step * alpha, step * alpha, z)]

    if entropy:
        terms.append((0.0, step * entropy, setup.uniform_centre()))

    w = numpy.array(z, dtype = float)

    for epoch in range(schedule.n_epochs):
        x0, y0 = setup.split(w)
        base_x, base_y = game.smooth_mapping(x0, y0, bundle.batch_query(w))
        phi_x0, psi_y0 = game.phi.smooth_gradient(x0), game.psi.smooth_gradient(y0)
        estimate = epoch_estimator(epoch, x0, y0)
        total = numpy.zeros_like(w)

        for t in range(schedule.epoch_length):
            x, y = setup.split(w)
            coupling_x, coupling_y = estimate(t, x, y)
            gx = base_x + coupling_x + game.phi.smooth_gradient(x) - phi_x0
            gy = base_y + coupling_y + game.psi.smooth_gradient(y) - psi_y0
            w = setup.mirror_step(step * setup.join(gx, gy), terms + [(1.0, 1.0, w)], settings.games.simplex_floor)
            total += w

        w = total / schedule.epoch_length

    return w


def _prepare(game, setup, z, alpha, eps, delta, seed, settings, solver, simplex):
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()

    if setup.domain.simplex is not simplex:
        raise ParameterRangeError('domain', setup.domain.value, f"the {'ball_simplex' if simplex else 'ball_ball'} setup for {solver}")

    schedule = vrmd_schedule(game, setup, alpha, eps, delta, settings)

    if len(seed) < schedule.length:
        raise SeedTooShortError(solver, schedule.length, len(seed))

    return numpy.asarray(z, dtype = float), schedule, settings


def vrmd2_subsolve(
        game: games.CompositeGame,
        setup: games.GameSetup,
        bundle,
        z,
        alpha: float,
        eps: float,
        delta: float,
        seed,
        settings = None,
        ) -> numpy.ndarray:
    """
    Ball-ball sub-solver. Seed records are (i, j) pairs; the estimator of A^T (y - y0) uses row a_i
    weighted by 1 / P_row(i), the estimator of A (x - x0) uses column j weighted by 1 / P_col(j).
    No entry is ever queried.
    """
    z, schedule, settings = _prepare(game, setup, z, alpha, eps, delta, seed, settings, 'vrmd2', False)
    squares = game.matrix ** 2
    row_scale = _inverse(squares.sum(axis = 1))
    column_scale = _inverse(squares.sum(axis = 0))
    records = seed.records
    length = schedule.epoch_length

    def epoch_estimator(epoch, x0, y0):
        block = records[epoch * length:(epoch + 1) * length]
        rows = bundle.rows(block[:, 0])
        columns = bundle.columns(block[:, 1])

        def estimate(t, x, y):
            i, j = block[t]
            return rows[t] * ((y[i] - y0[i]) * row_scale[i]), -columns[t] * ((x[j] - x0[j]) * column_scale[j])

        return estimate

    return run_vrmd(game, setup, bundle, z, alpha, schedule, epoch_estimator, settings)


def vrmd1_subsolve(
        game: games.CompositeGame,
        setup: games.GameSetup,
        bundle,
        z,
        alpha: float,
        eps: float,
        delta: float,
        seed,
        adaptive_rng: numpy.random.Generator,
        settings = None,
        ) -> numpy.ndarray:
    """
    Ball-simplex sub-solver. Seed records hold one column per matrix row: coordinate q of A (x - x0)
    is estimated by |a_q|^2 (x_j - x0_j) / A_qj from replayed entries. A^T (y - y0) is estimated
    from one row drawn adaptively with P(i) proportional to |y_i - y0_i|; those draws are charged
    every time.
    """
    z, schedule, settings = _prepare(game, setup, z, alpha, eps, delta, seed, settings, 'vrmd1', True)
    row_squares = game.row_norms ** 2
    records = seed.records
    length = schedule.epoch_length
    m = game.m

    def epoch_estimator(epoch, x0, y0):
        block = records[epoch * length:(epoch + 1) * length]
        valid = block >= 0
        owners = numpy.broadcast_to(numpy.arange(m), block.shape)
        values = numpy.zeros(block.shape)
        values[valid] = bundle.entries(owners[valid], block[valid])
        weights = numpy.zeros(block.shape)
        weights[valid] = row_squares[owners[valid]] / values[valid]
        columns = numpy.where(valid, block, 0)

        def estimate(t, x, y):
            difference = y - y0
            mass = float(numpy.abs(difference).sum())
            coupling_y = -weights[t] * (x[columns[t]] - x0[columns[t]])

            if mass == 0:
                return numpy.zeros_like(x), coupling_y

            i = int(adaptive_rng.choice(m, p = numpy.abs(difference) / mass))
            bundle.charge(ROW, [i])
            row = bundle.rows([i])[0]
            return row * (numpy.sign(difference[i]) * mass), coupling_y

        return estimate

    return run_vrmd(game, setup, bundle, z, alpha, schedule, epoch_estimator, settings)
