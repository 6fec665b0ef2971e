from __future__ import annotations

import logging
import typing

import numpy

from reuse_vr.errors import BinningError, MissingOracleError, ParameterRangeError
from reuse_vr.framework import NoiseConfig, SubSolverContract, simulate_composition
from reuse_vr.randomness import ADAPTIVE, NOISE, OBLIVIOUS, RandomStreams

from .. import diagnostics

log = logging.getLogger(__name__)


def pseudoindependence_probe(
        sub: SubSolverContract,
        u,
        tau: float,
        n_seeds: int,
        n_inner: int,
        eps: typing.Optional[float] = None,
        bins: typing.Optional[int] = None,
        bundle = None,
        master_seed: int = 0,
        settings = None,
        ) -> diagnostics.ProbeReport:
    """
    For ``n_seeds`` realized seeds s, estimate the TV distance between sub(u; s, .) + Unif(-tau, tau)^p
    and f_sub(u) + Unif(-tau, tau)^p from ``n_inner`` draws each.

    ``eps`` defaults to the smoothing bound p eta / (2 tau) of the contract's declared accuracy.

    The bound holds for every input u; the probe only checks the given one.
    """
    if sub.target is None:
        raise MissingOracleError(sub.name)

    if tau < 0:
        raise ParameterRangeError('tau', tau, 'tau >= 0')

    u = numpy.asarray(u, dtype = float)
    target = numpy.atleast_1d(numpy.asarray(sub.target(u), dtype = float))
    dim = target.size

    if dim > diagnostics.MAX_DIMENSIONS:
        raise BinningError(f"Sub-problem outputs have {dim} dimensions; probes bin at most {diagnostics.MAX_DIMENSIONS}.")

    if eps is None:
        eps = dim * sub.eta / (2 * tau) if tau > 0 else 0.0

    streams = RandomStreams(master_seed)
    oblivious_rng = streams.generator(OBLIVIOUS)
    seeds = []
    estimates = []

    for index in range(n_seeds):
        seed = sub.seed_spec.draw(bundle, oblivious_rng, draw_index = index)
        adaptive_rng = streams.generator(ADAPTIVE, index)
        noise_rng = streams.generator(NOISE, index)
        outputs = numpy.array([numpy.atleast_1d(sub.solve(u, seed, adaptive_rng)) for _ in range(n_inner)], dtype = float)
        p_samples = outputs + noise_rng.uniform(-tau, tau, size = outputs.shape)
        q_samples = target + noise_rng.uniform(-tau, tau, size = (n_inner, dim))
        estimate = diagnostics.tv_from_samples(p_samples, q_samples, bins, rng = streams.generator('bootstrap', index), settings = settings)
        seeds.append(seed.identifier)
        estimates.append(estimate)
        log.debug("seed %s: tv %.4f +- %.4f", seed.identifier, estimate.point_estimate, estimate.half_width)

    report = diagnostics.ProbeReport(contract = sub.name, tau = tau, eps = eps, seeds = seeds, estimates = estimates)
    log.info("probe of %s: eps_hat = %.4f, delta_hat = %.3f over %d seeds", sub.name, report.eps_hat, report.delta_hat, n_seeds)
    return report


def composition_probe(
        sub: SubSolverContract,
        post: typing.Callable,
        u0,
        T: int,
        n_runs: int,
        eps: float,
        delta: float,
        bins: typing.Optional[int] = None,
        bundle = None,
        noise: typing.Optional[NoiseConfig] = None,
        master_seed: int = 0,
        settings = None,
        ) -> diagnostics.CompositionReport:
    """
    Estimate the TV distance between T compositions with a fresh seed per step and T compositions
    replaying one seed, marginalized over that seed, for a sub-solver certified (eps, delta).
    """
    u0 = numpy.atleast_1d(numpy.asarray(u0, dtype = float))

    if u0.size > diagnostics.MAX_DIMENSIONS:
        raise BinningError(f"Composition states have {u0.size} dimensions; probes bin at most {diagnostics.MAX_DIMENSIONS}.")

    streams = RandomStreams(master_seed)
    fresh = []
    fixed = []

    for run in range(n_runs):
        fresh.append(simulate_composition(u0, sub, post, T, streams.child('fresh', run), bundle = bundle, noise = noise))
        replay = streams.child('fixed', run)
        seed = sub.seed_spec.draw(bundle, replay.generator(OBLIVIOUS))
        fixed.append(simulate_composition(u0, sub, post, T, replay, seed = seed, bundle = bundle, noise = noise))

    estimate = diagnostics.tv_from_samples(numpy.array(fresh), numpy.array(fixed), bins, rng = streams.generator('bootstrap'), settings = settings)
    report = diagnostics.CompositionReport(contract = sub.name, T = T, eps = eps, delta = delta, estimate = estimate)

    if not report.holds:
        log.warning("composition of %s over T = %d: tv %.4f exceeds the bound %.4f", sub.name, T, estimate.point_estimate, report.bound)

    return report
