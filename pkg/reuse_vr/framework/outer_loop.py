from __future__ import annotations

import logging
import time
import typing

import numpy

from reuse_vr.errors import DegenerateNoiseError
from reuse_vr.randomness import ADAPTIVE, NOISE, OBLIVIOUS, RandomStreams

from .. import framework

log = logging.getLogger(__name__)

PostProcess = typing.Callable[[numpy.ndarray, numpy.ndarray], numpy.ndarray]


def run_outer(
        problem: framework.OuterProblem,
        sub: framework.SubSolverContract,
        post: PostProcess,
        cfg: framework.OuterConfig,
        tracer = None,
        ) -> framework.RunRecord:
    """
    Run the variance-reduction outer loop.

    Standard draws a fresh oblivious seed per iteration and adds no noise. Noisy draws a fresh
    seed per iteration and perturbs every sub-solution. Reuse draws one seed for the whole run
    and perturbs every sub-solution. The output is the weighted combination of the iterates.
    """
    loop_type = cfg.loop_type

    if loop_type is not framework.LoopType.STANDARD and cfg.noise.tau == 0 and not cfg.allow_zero_noise:
        raise DegenerateNoiseError(loop_type.value)

    streams = RandomStreams(cfg.master_seed)
    oblivious_rng = streams.generator(OBLIVIOUS)
    adaptive_rng = streams.generator(ADAPTIVE)
    noise_rng = streams.generator(NOISE)
    bundle = problem.bundle

    u = numpy.array(problem.u0, dtype = float)
    iterates: typing.List[numpy.ndarray] = []
    seeds_used: typing.List[str] = []
    seed = None
    started = time.perf_counter()

    for iteration in range(cfg.n_outer):
        if tracer is not None:
            tracer.record_step_start('outer_iteration', iteration, bundle.snapshot())

        if seed is None or loop_type is not framework.LoopType.REUSE:
            seed = sub.seed_spec.draw(bundle, oblivious_rng, draw_index = len(seeds_used))
            seeds_used.append(seed.identifier)

        if tracer is not None:
            tracer.record_step_start('sub_solve', iteration, bundle.snapshot())

        half = sub.solve(u, seed, adaptive_rng)

        if loop_type is not framework.LoopType.STANDARD:
            half = framework.add_noise(half, cfg.noise, noise_rng)

        if tracer is not None:
            tracer.record_step_end(bundle.snapshot())
            tracer.record_step_start('post_process', iteration, bundle.snapshot())

        u = numpy.asarray(post(u, half), dtype = float)
        iterates.append(u)

        if tracer is not None:
            tracer.record_step_end(bundle.snapshot())
            tracer.record_step_end(bundle.snapshot())

        log.debug("%s iteration %d/%d of '%s' done", loop_type.value, iteration + 1, cfg.n_outer, sub.name)

    output = numpy.tensordot(cfg.weights, numpy.stack(iterates), axes = 1)
    wall_time = time.perf_counter() - started

    record = framework.RunRecord(
        config = cfg,
        initial = numpy.array(problem.u0, dtype = float),
        iterates = iterates,
        output = output,
        ledger = bundle.snapshot(),
        channels = bundle.channel_snapshots(),
        seeds_used = seeds_used,
        wall_time = wall_time,
        )

    log.info(
        "%s run of '%s' on %s: %d iterations, ledger %s",
        loop_type.value, sub.name, problem.name, cfg.n_outer, record.ledger.to_dict(),
        )

    return record
