from __future__ import annotations

import dataclasses
import logging
import math
import typing

import numpy

from reuse_vr.errors import ParameterRangeError
from reuse_vr.framework import (
    LoopType,
    NoiseConfig,
    OuterConfig,
    OuterProblem,
    ReuseParameters,
    RunRecord,
    SubSolverContract,
    reuse_parameters,
    run_outer,
    uniform_weights,
    )
from reuse_vr.oracles import MatrixOracle

from .. import games

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen = True)
class CppPlan:
    alpha: float
    eps: float
    eps_prime: float
    n_outer: int
    reuse: ReuseParameters
    schedule: games.VrmdSchedule

    def to_dict(self) -> dict:
        return {
            'alpha': self.alpha,
            'eps': self.eps,
            'eps_prime': self.eps_prime,
            'n_outer': self.n_outer,
            'reuse': self.reuse.to_dict(),
            'schedule': self.schedule.to_dict(),
            }


def default_alpha(game: games.CompositeGame, eps: float) -> float:
    """alpha = |A|_F^(2/3) eps^(1/3), the choice balancing outer iterations against sub-solve length."""
    return max(game.frobenius, eps) ** (2 / 3) * eps ** (1 / 3)


def cpp_plan(
        game: games.CompositeGame,
        setup: games.GameSetup,
        eps: float,
        alpha: float,
        delta: float,
        settings = None,
        ) -> CppPlan:
    """
    n_outer = ceil(C alpha theta / eps) and the sub-problem accuracy
    eps' = eps c / (K C (G + D L) d), with G and L bounded through |A|_F and the composite terms.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()

    if not alpha > 0:
        raise ParameterRangeError('alpha', alpha, 'alpha > 0')

    if not eps > 0:
        raise ParameterRangeError('eps', eps, 'eps > 0')

    games_settings = settings.games
    n_outer = max(1, math.ceil(games_settings.outer_constant * alpha * setup.theta / eps))
    lipschitz = game.frobenius + max(game.phi.smoothness, game.psi.smoothness)
    bound = math.sqrt(2) * game.frobenius + game.phi.gradient_bound + game.psi.gradient_bound
    denominator = games_settings.accuracy_safety * setup.C * (bound + setup.diameter * lipschitz) * setup.dim
    eps_prime = eps * setup.c / max(denominator, 1.0)
    reuse = reuse_parameters(eps_prime, delta, n_outer, settings = settings)
    schedule = games.vrmd_schedule(game, setup, alpha, reuse.eta_prime, reuse.delta_sub, settings)

    return CppPlan(
        alpha = alpha,
        eps = eps,
        eps_prime = eps_prime,
        n_outer = n_outer,
        reuse = reuse,
        schedule = schedule,
        )


def cpp_post_process(game: games.CompositeGame, setup: games.GameSetup, bundle, alpha: float, settings = None):
    """
    zeta(z, z') = argmin <g(z''), u> + alpha V_z(u) with z'' the projection of z'.

    g(z'') is one batch query.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    extra = [(0.0, game.psi.entropy, setup.uniform_centre())] if game.psi.entropy else []

    def post(z, z_half):
        anchor = setup.project(z_half)
        g = setup.join(*game.smooth_mapping(*setup.split(anchor), bundle.batch_query(anchor)))
        return setup.mirror_step(g, [(alpha, alpha, numpy.asarray(z, dtype = float))] + extra, settings.games.simplex_floor)

    return post


def cpp_contract(game, setup, bundle, plan: CppPlan, settings = None) -> SubSolverContract:
    alpha = plan.alpha
    eta, delta_sub = plan.reuse.eta_prime, plan.reuse.delta_sub

    if setup.domain.simplex:
        spec = games.entry_seed_spec(game, plan.schedule.length)

        def solve(z, seed, rng):
            return games.vrmd1_subsolve(game, setup, bundle, z, alpha, eta, delta_sub, seed, rng, settings)

    else:
        spec = games.row_column_seed_spec(game, plan.schedule.length)

        def solve(z, seed, rng):
            return games.vrmd2_subsolve(game, setup, bundle, z, alpha, eta, delta_sub, seed, settings)

    def target(z):
        return games.extragradient_reference(game, setup, z, alpha, settings)

    return SubSolverContract(
        name = 'vrmd1' if setup.domain.simplex else 'vrmd2',
        seed_spec = spec,
        solve = solve,
        target = target,
        eta = eta,
        delta = delta_sub,
        )


def cpp_solve(
        game: games.CompositeGame,
        setup: games.GameSetup,
        eps: float,
        alpha: typing.Optional[float] = None,
        delta: float = 0.1,
        mode = LoopType.REUSE,
        master_seed: int = 0,
        cfg: typing.Optional[OuterConfig] = None,
        bundle: typing.Optional[MatrixOracle] = None,
        settings = None,
        tracer = None,
        ) -> typing.Tuple[numpy.ndarray, RunRecord]:
    """Conceptual proximal point with VRMD sub-solves; the output is the average of the iterates."""
    setup.check(game)
    alpha = default_alpha(game, eps) if alpha is None else alpha
    plan = cpp_plan(game, setup, eps, alpha, delta, settings)
    bundle = bundle if bundle is not None else MatrixOracle(game.matrix)

    if cfg is None:
        cfg = OuterConfig(
            loop_type = mode,
            n_outer = plan.n_outer,
            weights = uniform_weights(plan.n_outer),
            noise = NoiseConfig(tau = plan.reuse.tau),
            master_seed = master_seed,
            )

    else:
        cfg = cfg.with_loop_type(mode)

    contract = cpp_contract(game, setup, bundle, plan, settings)
    post = cpp_post_process(game, setup, bundle, alpha, settings)
    problem = OuterProblem(u0 = setup.initial_point(), bundle = bundle, name = f"game({setup.domain.value}, {game.m}x{game.n})")
    record = run_outer(problem, contract, post, cfg, tracer)
    record.plan = plan.to_dict()
    gap = games.duality_gap(game, setup, record.output)
    record.plan['gap'] = gap
    log.info("cpp finished: n_outer = %d, gap = %.3g", cfg.n_outer, gap)
    return record.output, record
