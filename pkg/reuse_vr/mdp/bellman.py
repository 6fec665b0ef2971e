from __future__ import annotations

import typing

import numpy

from reuse_vr.commons import as_vector

from .. import mdp


def greedy(m: mdp.Dmdp, q: numpy.ndarray, tolerance: float = 0.0) -> typing.Tuple[numpy.ndarray, mdp.Policy]:
    """
    Per-state maxima of the pair values ``q``, with the lowest action index among those within
    ``tolerance`` of the maximum.
    """
    starts = m.offsets[:-1]
    values = numpy.maximum.reduceat(q, starts)
    candidates = numpy.where(q >= values[m.pair_states] - tolerance, numpy.arange(m.n_pairs), m.n_pairs)
    first = numpy.minimum.reduceat(candidates, starts)
    return values, mdp.Policy(first - starts)


def q_values(m: mdp.Dmdp, v, bundle = None, gamma: typing.Optional[float] = None, rewards = None) -> numpy.ndarray:
    """r(s, a) + gamma p(s, a).v; P v is one batch query when ``bundle`` is given."""
    v = as_vector(v, 'v', m.n_states)
    gamma = m.gamma if gamma is None else gamma
    rewards = m.rewards if rewards is None else rewards
    expected = bundle.batch_query(v) if bundle is not None else m.transitions @ v
    return rewards + gamma * expected


def bellman_apply(m: mdp.Dmdp, v, bundle = None, gamma: typing.Optional[float] = None, rewards = None) -> typing.Tuple[numpy.ndarray, mdp.Policy]:
    """
    T[v](s) = max_a r(s, a) + gamma p(s, a).v and its greedy policy, ties going to the lowest action index.

    >>> m = mdp.Dmdp.from_dense([[1.0]], [1.0], 0.9, [1])
    >>> bellman_apply(m, [0.0])[0].tolist()
    [1.0]
    """
    return greedy(m, q_values(m, v, bundle, gamma, rewards))
