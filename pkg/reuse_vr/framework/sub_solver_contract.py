from __future__ import annotations

import dataclasses
import typing

import numpy

from .. import framework

Solve = typing.Callable[[numpy.ndarray, framework.ObliviousSeed, numpy.random.Generator], numpy.ndarray]


@dataclasses.dataclass(frozen = True)
class SubSolverContract:
    """
    A sub-problem solver bundled with its seed distribution and its declared guarantee.

    ``solve(u, seed, adaptive_rng)`` must be deterministic given its arguments.
    ``target(u)``, when known, is the exact sub-problem solution f_sub(u).
    ``eta`` and ``delta`` declare the (eta, delta)-approximation it meets, in the infinity norm.
    """

    name: str
    seed_spec: framework.SeedSpec
    solve: Solve
    target: typing.Optional[typing.Callable[[numpy.ndarray], numpy.ndarray]] = None
    eta: float = 0.0
    delta: float = 0.0
