from __future__ import annotations

import logging
import typing

import numpy

from reuse_vr.commons import as_vector
from reuse_vr.framework import (
    LoopType,
    NoiseConfig,
    OuterConfig,
    OuterProblem,
    RunRecord,
    SubSolverContract,
    last_iterate_weights,
    run_outer,
    )
from reuse_vr.oracles import ComponentOracle

from .. import fsm

log = logging.getLogger(__name__)


def app_contract(problem, bundle, plan: fsm.AppPlan, spec, settings = None, subsolver = None) -> SubSolverContract:
    """The high-precision SVRG sub-solver of an APP run, on packed (x, v) iterates."""
    lam, mu = plan.lam, plan.mu
    probabilities = spec.probabilities
    subsolver = subsolver or fsm.svrg_hp_subsolve

    def solve(u, seed, rng):
        state = fsm.AppState.unpack(u, lam, mu)
        return subsolver(
            problem, bundle, state, seed, lam, plan.sub_accuracy, plan.reuse.delta_sub, probabilities, settings,
            )

    def target(u):
        return fsm.reference_subsolve(problem, fsm.AppState.unpack(u, lam, mu).y, lam, settings)

    return SubSolverContract(
        name = 'svrg-hp',
        seed_spec = spec,
        solve = solve,
        target = target,
        eta = plan.reuse.eta_prime,
        delta = plan.reuse.delta_sub,
        )


def app_solve(
        problem,
        x0,
        c: float,
        lam: float,
        delta: float,
        mode = LoopType.REUSE,
        master_seed: int = 0,
        cfg: typing.Optional[OuterConfig] = None,
        nonuniform: bool = False,
        probabilities: typing.Optional[numpy.ndarray] = None,
        subsolver: typing.Optional[typing.Callable] = None,
        bundle: typing.Optional[ComponentOracle] = None,
        settings = None,
        tracer = None,
        ) -> RunRecord:
    """
    Accelerated proximal point over high-precision SVRG sub-solves.

    The loop length, weights (last iterate) and noise come from :func:`app_plan`; ``cfg``
    overrides them when given. The run's output is the packed (x, v); see :func:`app_solution`.

    Seeds are uniform over the components, proportional to sqrt(L_i) with ``nonuniform``, or follow
    ``probabilities`` when given; ``subsolver`` replaces :func:`svrg_hp_subsolve`.
    """
    x0 = as_vector(x0, 'x0', problem.dim)
    bundle = bundle if bundle is not None else ComponentOracle(problem)
    gradient_norm = float(numpy.linalg.norm(bundle.batch_query(x0)))

    if probabilities is not None:
        spec = fsm.index_seed_spec(f"weighted[{problem.n}]", probabilities, 1)
    elif nonuniform:
        spec = fsm.nonuniform_seed_spec(problem, length = 1)
    else:
        spec = fsm.uniform_seed_spec(problem, 1)

    plan = fsm.app_plan(problem, gradient_norm, c, lam, delta, spec.probabilities, settings)
    spec = spec.with_length(plan.seed_length)

    if cfg is None:
        cfg = OuterConfig(
            loop_type = mode,
            n_outer = plan.n_outer,
            weights = last_iterate_weights(plan.n_outer),
            noise = NoiseConfig(tau = plan.tau),
            master_seed = master_seed,
            )

    else:
        cfg = cfg.with_loop_type(mode)

    u0 = fsm.AppState(x = x0, v = numpy.zeros(problem.dim), lam = lam, mu = problem.mu).pack()
    contract = app_contract(problem, bundle, plan, spec, settings, subsolver)
    outer_problem = OuterProblem(u0 = u0, bundle = bundle, name = f"fsm(n = {problem.n}, d = {problem.dim})")
    record = run_outer(outer_problem, contract, fsm.packed_post_process(lam, problem.mu), cfg, tracer)
    record.plan = {**plan.to_dict(), 'dim': problem.dim}
    log.info("app finished: n_outer = %d, seed length = %d", cfg.n_outer, plan.seed_length)
    return record


def app_solution(record: RunRecord) -> numpy.ndarray:
    """The x part of an APP run's output."""
    return numpy.asarray(record.output)[:record.plan['dim']]
