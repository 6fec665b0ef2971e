from __future__ import annotations

import math

import numpy

from reuse_vr.commons import as_vector, check_finite

from .. import framework


def add_noise(v, cfg: framework.NoiseConfig, rng: numpy.random.Generator) -> numpy.ndarray:
    """
    Perturb ``v`` by independent uniform noise of half-width ``cfg.tau`` per coordinate.

    In grid mode, ``v`` is first rounded down onto the grid of pitch ``beta`` and each coordinate
    is then replaced by a uniformly chosen grid point within distance ``tau`` of the rounded value.

    >>> add_noise([1.5, -2.0], framework.NoiseConfig(tau = 0.0), numpy.random.default_rng(0)).tolist()
    [1.5, -2.0]
    """
    v = check_finite(as_vector(v, 'v'), 'v')

    if cfg.mode is framework.NoiseMode.GRID:
        base = numpy.floor(v / cfg.beta) * cfg.beta
        reach = math.floor(cfg.tau / cfg.beta + 1e-9)
        return base + rng.integers(-reach, reach + 1, size = v.shape) * cfg.beta

    if cfg.tau == 0:
        return v.copy()

    return v + rng.uniform(-cfg.tau, cfg.tau, size = v.shape)


def noisy(sub: framework.SubSolverContract, noise: framework.NoiseConfig) -> framework.SubSolverContract:
    """The contract of ``sub`` followed by ``add_noise``; the noise is drawn from the adaptive stream."""

    def solve(u, seed, rng):
        return add_noise(sub.solve(u, seed, rng), noise, rng)

    return framework.SubSolverContract(
        name = f"noisy({sub.name})",
        seed_spec = sub.seed_spec,
        solve = solve,
        target = sub.target,
        eta = sub.eta + noise.tau,
        delta = sub.delta,
        )
