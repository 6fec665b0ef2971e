from __future__ import annotations

import dataclasses
import typing

import numpy

from reuse_vr.errors import PreconditionError

from .. import mdp


@dataclasses.dataclass(frozen = True)
class StabilityRecord:
    difference: numpy.ndarray
    bound: float
    holds: bool

    def to_dict(self) -> dict:
        return {'difference': self.difference.tolist(), 'bound': self.bound, 'holds': self.holds}


def reward_stability_check(m: mdp.Dmdp, r, r_low, gamma: typing.Optional[float] = None, settings = None) -> StabilityRecord:
    """
    Check 0 <= v*_r - v*_{r_low} <= max(r - r_low) / (1 - gamma) entrywise with exact solves.
    """
    gamma = m.gamma if gamma is None else gamma
    r = numpy.asarray(r, dtype = float)
    r_low = numpy.asarray(r_low, dtype = float)

    if r.shape != r_low.shape or (r_low > r).any():
        raise PreconditionError("The lowered reward must have the shape of the reward and lie below it.")

    high, _ = mdp.exact_solve(m, gamma, r, settings)
    low, _ = mdp.exact_solve(m, gamma, r_low, settings)
    difference = high - low
    bound = float((r - r_low).max()) / (1 - gamma)
    slack = 1e-9 * (1 + float(numpy.abs(high).max()))
    holds = bool((difference >= -slack).all() and (difference <= bound + slack).all())
    return StabilityRecord(difference = difference, bound = bound, holds = holds)
