from __future__ import annotations

import typing

import numpy

from reuse_vr.commons import AliasSampler
from reuse_vr.errors import ParameterRangeError
from reuse_vr.framework import SeedSpec, seed_length


def index_seed_spec(dist_id: str, probabilities, length: int) -> SeedSpec:
    """Seeds of ``length`` i.i.d. component indices, drawn and charged through a component bundle."""
    sampler = AliasSampler(probabilities)

    def draw_records(bundle, rng, size):
        return bundle.draw(sampler, rng, size)

    return SeedSpec(
        dist_id = dist_id,
        length = int(length),
        draw_records = draw_records,
        probabilities = sampler.probabilities,
        )


def uniform_seed_spec(problem, length: int) -> SeedSpec:
    return index_seed_spec(f"uniform[{problem.n}]", numpy.full(problem.n, 1.0 / problem.n), length)


def nonuniform_seed_spec(
        problem,
        length: typing.Optional[int] = None,
        n_outer: int = 1,
        delta: float = 0.1,
        settings = None,
        ) -> SeedSpec:
    """
    Importance sampling P[i] = sqrt(L_i) / sum_k sqrt(L_k).

    Without ``length``, the seed holds ceil(C b log(b n_outer / delta)) records with
    b = sum_i sqrt(L_i / (n mu)).
    """
    smoothness = numpy.asarray(problem.smoothness, dtype = float)

    if (smoothness <= 0).any():
        raise ParameterRangeError('smoothness', smoothness.tolist(), 'every L_i > 0')

    roots = numpy.sqrt(smoothness)

    if length is None:
        base = float(numpy.sqrt(smoothness / (problem.n * problem.mu)).sum())
        length = seed_length(base, n_outer, delta, settings)

    return index_seed_spec(f"sqrt-smoothness[{problem.n}]", roots / roots.sum(), length)
