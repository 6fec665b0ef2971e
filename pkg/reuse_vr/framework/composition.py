from __future__ import annotations

import typing

import numpy

from reuse_vr.errors import LoopConfigurationError
from reuse_vr.randomness import ADAPTIVE, NOISE, OBLIVIOUS, RandomStreams

from .. import framework


def simulate_composition(
        u0,
        sub: framework.SubSolverContract,
        post,
        T: int,
        streams: RandomStreams,
        seed: typing.Optional[framework.ObliviousSeed] = None,
        bundle = None,
        noise: typing.Optional[framework.NoiseConfig] = None,
        ) -> numpy.ndarray:
    """
    One sample of the T-fold composition of ``post`` with ``sub``.

    Without ``seed`` every step draws a fresh oblivious seed from ``streams``; with ``seed`` every
    step replays it. Adaptive and noise randomness are fresh at every step in both cases.
    """
    if T < 1:
        raise LoopConfigurationError(f"The composition depth must be at least 1, got {T}.")

    oblivious_rng = streams.generator(OBLIVIOUS)
    adaptive_rng = streams.generator(ADAPTIVE)
    noise_rng = streams.generator(NOISE)
    u = numpy.array(u0, dtype = float)

    for step in range(T):
        current = seed if seed is not None else sub.seed_spec.draw(bundle, oblivious_rng, draw_index = step)
        half = sub.solve(u, current, adaptive_rng)

        if noise is not None:
            half = framework.add_noise(half, noise, noise_rng)

        u = numpy.asarray(post(u, half), dtype = float)

    return u
