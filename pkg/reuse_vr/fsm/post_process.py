from __future__ import annotations

import math

import numpy

from .. import fsm


def fsm_post_process(u: fsm.AppState, u_half) -> fsm.AppState:
    """
    Momentum step: x becomes the sub-solution x', and
    v becomes (1 - rho^-1/2) v + rho^-1/2 (y - iota lam (y - x')).
    """
    x_half = numpy.asarray(u_half, dtype = float)
    s = 1 / math.sqrt(u.rho)
    y = u.y
    v = (1 - s) * u.v + s * (y - u.iota * u.lam * (y - x_half))
    return fsm.AppState(x = x_half, v = v, lam = u.lam, mu = u.mu)


def packed_post_process(lam: float, mu: float):
    """``fsm_post_process`` on packed (x, v) vectors, as the outer loop expects."""

    def post(u, u_half):
        return fsm_post_process(fsm.AppState.unpack(u, lam, mu), u_half).pack()

    return post
