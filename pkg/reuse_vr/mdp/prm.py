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
    last_iterate_weights,
    reuse_parameters,
    run_outer,
    )
from reuse_vr.oracles import SimulatorOracle
from reuse_vr.randomness import OBLIVIOUS, RandomStreams

from .. import mdp

log = logging.getLogger(__name__)

FINAL = 'final'


@dataclasses.dataclass(frozen = True)
class PrmPlan:
    gamma: float
    gamma_prime: float
    eps: float
    eps_prime: float
    n_outer: int
    reuse: ReuseParameters
    schedule: mdp.VrviSchedule

    @property
    def sub_accuracy(self) -> float:
        """Infinity-norm accuracy asked from every sub-solve."""
        return self.reuse.eta_prime

    def to_dict(self) -> dict:
        return {
            'gamma': self.gamma,
            'gamma_prime': self.gamma_prime,
            'eps': self.eps,
            'eps_prime': self.eps_prime,
            'n_outer': self.n_outer,
            'reuse': self.reuse.to_dict(),
            'sub_accuracy': self.sub_accuracy,
            'schedule': self.schedule.to_dict(),
            }


def prm_plan(m: mdp.Dmdp, eps: float, gamma_prime: float, delta: float, settings = None) -> PrmPlan:
    """
    Loop length and sub-problem accuracy of the proximal reward method.

    Sub-problems are solved to eps' = (eps / 4) (1 - gamma) / (1 - gamma'); the reused seed is
    hidden by noise of half-width eps' / 4, and every sub-solve runs at the reuse accuracy eta'
    whatever the loop type, so all loop types consume seeds of the same length.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    gamma = m.gamma

    if not 0 < gamma_prime < gamma:
        raise ParameterRangeError('gamma_prime', gamma_prime, f'0 < gamma_prime < gamma = {gamma}')

    if not 0 < eps <= 1 / (1 - gamma):
        raise ParameterRangeError('eps', eps, f'0 < eps <= 1 / (1 - gamma) = {1 / (1 - gamma)}')

    ratio = (1 - gamma_prime) / (1 - gamma)
    eps_prime = eps / 4 / ratio
    v_max = max(m.value_bound, eps)
    n_outer = max(1, math.ceil(settings.mdp.outer_constant * ratio * math.log(4 * v_max / eps)))
    reuse = reuse_parameters(eps_prime / 2, delta, n_outer, settings = settings)
    schedule = mdp.vrvi_schedule(m.n_pairs, gamma_prime, reuse.eta_prime, reuse.delta_sub, m.value_bound, settings)

    return PrmPlan(
        gamma = gamma,
        gamma_prime = gamma_prime,
        eps = eps,
        eps_prime = eps_prime,
        n_outer = n_outer,
        reuse = reuse,
        schedule = schedule,
        )


def prm_post_process(eps_prime: float):
    """zeta(v, v') = max(v' - eps', 0)."""

    def post(v, v_half):
        return numpy.maximum(numpy.asarray(v_half, dtype = float) - eps_prime, 0.0)

    return post


def prm_contract(m: mdp.Dmdp, bundle, plan: PrmPlan, exact_inner: bool = False, settings = None) -> SubSolverContract:
    gamma_prime = plan.gamma_prime
    spec = mdp.vrvi_seed_spec(m, 0 if exact_inner else plan.schedule.length)

    def target(v):
        return mdp.exact_solve(m, gamma_prime, mdp.sub_reward(m, gamma_prime, v), settings)[0]

    def solve(v, seed, rng):
        if exact_inner:
            return mdp.exact_solve(m, gamma_prime, mdp.sub_reward(m, gamma_prime, v, bundle), settings)[0]

        return mdp.vrvi_subsolve(
            m, bundle, gamma_prime, v, 2 * plan.sub_accuracy, plan.reuse.delta_sub, seed, m.value_bound, settings,
            )

    return SubSolverContract(
        name = 'exact-vi' if exact_inner else 'vrvi',
        seed_spec = spec,
        solve = solve,
        target = target,
        eta = plan.sub_accuracy,
        delta = plan.reuse.delta_sub,
        )


def prm_solve(
        m: mdp.Dmdp,
        eps: float,
        gamma_prime: float,
        delta: float = 0.1,
        mode = LoopType.REUSE,
        master_seed: int = 0,
        cfg: typing.Optional[OuterConfig] = None,
        exact_inner: bool = False,
        bundle: typing.Optional[SimulatorOracle] = None,
        settings = None,
        tracer = None,
        ) -> typing.Tuple[numpy.ndarray, mdp.Policy, RunRecord]:
    """
    Solve the gamma-discounted problem through gamma'-discounted sub-problems, then extract a
    policy with one final policy sub-solve on a freshly drawn seed.

    With ``exact_inner``, sub-problems are solved exactly by policy iteration.
    """
    plan = prm_plan(m, eps, gamma_prime, delta, settings)
    bundle = bundle if bundle is not None else SimulatorOracle(m.transitions)

    if cfg is None:
        cfg = OuterConfig(
            loop_type = mode,
            n_outer = plan.n_outer,
            weights = last_iterate_weights(plan.n_outer),
            noise = NoiseConfig(tau = plan.eps_prime / 4),
            master_seed = master_seed,
            )

    else:
        cfg = cfg.with_loop_type(mode)

    contract = prm_contract(m, bundle, plan, exact_inner, settings)
    post = prm_post_process(plan.eps_prime)
    problem = OuterProblem(u0 = numpy.zeros(m.n_states), bundle = bundle, name = f"dmdp(S = {m.n_states}, A = {m.n_pairs})")
    record = run_outer(problem, contract, post, cfg, tracer)

    rng = RandomStreams(cfg.master_seed).child(FINAL).generator(OBLIVIOUS)
    seed = contract.seed_spec.draw(bundle, rng, draw_index = len(record.seeds_used))

    if exact_inner:
        rewards = mdp.sub_reward(m, gamma_prime, record.output, bundle)
        values, policy = mdp.exact_solve(m, gamma_prime, rewards, settings)
    else:
        values, policy = mdp.vrvi_policy_subsolve(
            m, bundle, gamma_prime, record.output, 2 * plan.sub_accuracy, plan.reuse.delta_sub, seed, m.value_bound, settings,
            )

    values = post(record.output, values)
    record.ledger = bundle.snapshot()
    record.channels = bundle.channel_snapshots()
    record.plan = {**plan.to_dict(), 'policy': policy.to_list(), 'final_seed': seed.identifier}
    log.info("prm finished: n_outer = %d, eps' = %.3g", cfg.n_outer, plan.eps_prime)
    return values, policy, record
