from __future__ import annotations

import logging
import time
import typing

import numpy

from reuse_vr.errors import ParameterRangeError
from reuse_vr.framework import LoopType
from reuse_vr.randomness import RandomStreams

from .. import experiments, fsm, games, mdp, topev

log = logging.getLogger(__name__)

# Discount standing in for the average-reward limit when ranking policies of tiny AMDPs.
AVERAGE_REWARD_DISCOUNT = 1 - 1e-4


def trial_seed(streams: RandomStreams) -> int:
    return int(streams.sequence('run').generate_state(1, numpy.uint64)[0])


def _positive(name: str) -> typing.Callable[[float], None]:

    def check(knob):
        if not knob > 0:
            raise ParameterRangeError(name, knob, f'{name} > 0')

    return check


def _below(name: str, bound: float) -> typing.Callable[[float], None]:

    def check(knob):
        if not 0 < knob < bound:
            raise ParameterRangeError(name, knob, f'0 < {name} < {bound}')

    return check


def _fsm(problem: fsm.FsmProblem, cfg, settings) -> experiments.Instantiation:
    x0 = numpy.zeros(problem.dim)
    f_star = problem.value(fsm.exact_minimizer(problem, settings))
    initial_gap = problem.value(x0) - f_star

    def check(knob):
        if not knob >= problem.mu:
            raise ParameterRangeError('lambda', knob, f'lambda >= mu = {problem.mu:.6g}')

    def solve(knob, mode, master_seed):
        record = fsm.app_solve(problem, x0, cfg.c, knob, cfg.delta, mode = mode, master_seed = master_seed, settings = settings)
        gap = problem.value(fsm.app_solution(record)) - f_star
        error = gap / initial_gap if initial_gap > 0 else 0.0
        return record.ledger, error, {'n_outer': record.config.n_outer, 'distinct_seeds': record.distinct_seeds}

    return experiments.Instantiation(
        name = 'fsm',
        knob = 'lambda',
        default_knobs = (problem.mu,),
        check = check,
        solve = solve,
        tolerance = 1 / cfg.c,
        )


def _dmdp(m: mdp.Dmdp, cfg, settings) -> experiments.Instantiation:
    v_star, _ = mdp.exact_solve(m, settings = settings)
    gamma_prime = mdp.runtime_profile(m, cfg.eps, LoopType.REUSE, cfg.delta, settings).gamma_prime

    def solve(knob, mode, master_seed):
        _, policy, record = mdp.prm_solve(
            m, cfg.eps, knob, cfg.delta, mode = mode, master_seed = master_seed, exact_inner = cfg.exact_inner, settings = settings,
            )
        error = float(numpy.abs(v_star - mdp.policy_value(m, policy)).max())
        return record.ledger, error, {'n_outer': record.config.n_outer, 'policy': policy.to_list()}

    return experiments.Instantiation(
        name = 'dmdp',
        knob = 'gamma_prime',
        default_knobs = (gamma_prime,),
        check = _below('gamma_prime', m.gamma),
        solve = solve,
        tolerance = cfg.eps,
        )


def _amdp(m: mdp.Dmdp, cfg, settings) -> experiments.Instantiation:
    _, best = mdp.exact_solve(m.with_gamma(AVERAGE_REWARD_DISCOUNT), settings = settings)
    rho_star = mdp.average_reward(m, best)
    gamma = mdp.amdp_discount(cfg.eps, cfg.t_mix)
    accuracy = cfg.eps / (3 * (1 - gamma))
    gamma_prime = mdp.runtime_profile(m.with_gamma(gamma), accuracy, LoopType.REUSE, cfg.delta, settings).gamma_prime

    def solve(knob, mode, master_seed):
        policy, record = mdp.amdp_solve(
            m, cfg.eps, cfg.t_mix, knob, cfg.delta, mode = mode, master_seed = master_seed, exact_inner = cfg.exact_inner, settings = settings,
            )
        error = max(rho_star - mdp.average_reward(m, policy), 0.0)
        return record.ledger, error, {'n_outer': record.config.n_outer, 'policy': policy.to_list()}

    return experiments.Instantiation(
        name = 'amdp',
        knob = 'gamma_prime',
        default_knobs = (gamma_prime,),
        check = _below('gamma_prime', gamma),
        solve = solve,
        tolerance = cfg.eps,
        )


def _game(problem, cfg, settings) -> experiments.Instantiation:
    game, setup = problem

    def solve(knob, mode, master_seed):
        _, record = games.cpp_solve(game, setup, cfg.eps, knob, cfg.delta, mode = mode, master_seed = master_seed, settings = settings)
        return record.ledger, record.plan['gap'], {'n_outer': record.config.n_outer}

    return experiments.Instantiation(
        name = f'game({setup.domain.value})',
        knob = 'alpha',
        default_knobs = (games.default_alpha(game, cfg.eps),),
        check = _positive('alpha'),
        solve = solve,
        tolerance = cfg.eps,
        )


def _topev(matrix: numpy.ndarray, cfg, settings) -> experiments.Instantiation:
    spectrum = numpy.linalg.eigvalsh(matrix.T @ matrix)[::-1]
    gap = float(spectrum[0] - spectrum[1]) if len(spectrum) > 1 else float(spectrum[0])
    lambda_prime, _ = topev.estimate_shift(matrix, gap, RandomStreams(cfg.master_seed).generator('shift'), settings)

    def solve(knob, mode, master_seed):
        problem = topev.TopEvProblem(matrix, cfg.eps, lambda_prime, alpha = knob)
        result = topev.shift_invert_solve(problem, mode, cfg.delta, master_seed, strict = False, settings = settings)
        error = 1 - result.rayleigh / problem.top_eigenvalue
        return result.ledger, error, {'iterations': result.iterations, 'rayleigh': result.rayleigh}

    return experiments.Instantiation(
        name = 'topev',
        knob = 'alpha',
        default_knobs = (1.0,),
        check = _positive('alpha'),
        solve = solve,
        tolerance = cfg.eps,
        )


BUILDERS = {
    experiments.Command.FSM: _fsm,
    experiments.Command.DMDP: _dmdp,
    experiments.Command.AMDP: _amdp,
    experiments.Command.GAME22: _game,
    experiments.Command.GAME21: _game,
    experiments.Command.TOPEV: _topev,
    }


def instantiation(command: experiments.Command, problem, cfg, settings = None) -> experiments.Instantiation:
    """Bind the solver of ``command`` to ``problem``; the reference solution is computed once here."""
    from reuse_vr.settings import default_settings

    return BUILDERS[command](problem, cfg, settings or default_settings())


def cell_runner(solver: experiments.Instantiation, knob: float, mode: LoopType) -> typing.Callable[[RandomStreams], experiments.TrialOutcome]:

    def run(streams):
        start = time.perf_counter()
        ledger, error, details = solver.solve(knob, mode, trial_seed(streams))
        secs = time.perf_counter() - start
        return experiments.TrialOutcome(ledger = ledger, error = float(error), success = error <= solver.tolerance, secs = secs, details = details)

    return run
